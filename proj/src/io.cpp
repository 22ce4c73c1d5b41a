#include "remanlca/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "remanlca/errors.hpp"

namespace remanlca::io {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::string get_string(const Json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

std::string get_string_or(const Json& obj, const char* key, std::string fallback, const std::string& where) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  return get_string(obj, key, where);
}

double get_number(const Json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number()) throw InputError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

std::int64_t get_integer(const Json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    // 3.0 is acceptable, 2.5 is not.
    double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 9e15) return static_cast<std::int64_t>(d);
  }
  throw InputError(where + ": field '" + key + "' must be an integer");
}

const Json& get_array(const Json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_array()) throw InputError(where + ": field '" + key + "' must be an array");
  return v;
}

YearRange parse_years(const Json& obj, const std::string& where) {
  if (!obj.contains("time_range")) return {};
  const auto& v = obj.at("time_range");
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw InputError(where + ": time_range must be [first_year, last_year]");
  return {v[0].get<int>(), v[1].get<int>()};
}

QualityDimensions parse_quality(const Json& obj, const std::string& where) {
  if (!obj.contains("quality")) throw InputError(where + ": missing field 'quality'");
  const auto& q = obj.at("quality");
  if (q.is_string()) return QualityDimensions::uniform(parse_quality_rating(q.get<std::string>()));
  QualityDimensions d;
  d.technology = parse_quality_rating(get_string(q, "technology", where + " quality"));
  d.age = parse_quality_rating(get_string(q, "age", where + " quality"));
  d.geography = parse_quality_rating(get_string(q, "geography", where + " quality"));
  d.completeness = parse_quality_rating(get_string(q, "completeness", where + " quality"));
  d.reliability = parse_quality_rating(get_string(q, "reliability", where + " quality"));
  return d;
}

Json quality_json(const QualityDimensions& d) {
  auto all = d.as_array();
  if (std::all_of(all.begin(), all.end(), [&](QualityRating r) { return r == all[0]; }))
    return std::string(to_string(all[0]));
  return Json{{"technology", to_string(d.technology)},
              {"age", to_string(d.age)},
              {"geography", to_string(d.geography)},
              {"completeness", to_string(d.completeness)},
              {"reliability", to_string(d.reliability)}};
}

SystemKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "virgin") return SystemKind::Virgin;
  if (s == "remanufactured" || s == "reman") return SystemKind::Remanufactured;
  throw InputError(where + ": kind must be 'virgin' or 'remanufactured'");
}

Direction parse_direction(const std::string& s, const std::string& where) {
  if (s == "input") return Direction::Input;
  if (s == "output") return Direction::Output;
  throw InputError(where + ": direction must be 'input' or 'output'");
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fingerprint(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SystemParse parse_system_lenient(const Json& doc, const BoundaryRubric& rubric) {
  const std::string top = "system";
  SystemParse out;
  ProductSystem sys;
  sys.name = get_string(doc, "name", top);
  const std::string where = "system '" + sys.name + "'";
  sys.kind = parse_kind(get_string(doc, "kind", where), where);
  sys.device_mass_kg = get_number(doc, "device_mass_kg", where);
  sys.functional_unit = get_string_or(doc, "functional_unit", "", where);

  for (const auto& sj : get_array(doc, "stages", where)) {
    LifeStage stage;
    stage.name = get_string(sj, "name", where + " stage");
    const std::string swhere = "stage '" + stage.name + "'";
    if (sj.contains("manual")) {
      if (!sj.at("manual").is_boolean()) throw InputError(swhere + ": 'manual' must be a boolean");
      stage.manual = sj.at("manual").get<bool>();
    }
    for (const auto& fj : get_array(sj, "flows", swhere)) {
      MaterialFlow flow;
      flow.name = get_string(fj, "name", swhere + " flow");
      flow.stage = stage.name;
      const std::string fwhere = swhere + " flow '" + flow.name + "'";
      flow.direction = parse_direction(get_string_or(fj, "direction", "input", fwhere), fwhere);
      flow.region = get_string_or(fj, "region", "", fwhere);
      flow.category = get_string_or(fj, "category", "", fwhere);
      flow.factor = get_string_or(fj, "factor", "", fwhere);
      flow.time_range = parse_years(fj, fwhere);
      flow.quality = score_quality(parse_quality(fj, fwhere));

      const auto unit = parse_unit(get_string(fj, "unit", fwhere));
      if (!unit) {
        out.report.add(Severity::Error, fwhere, "unknown unit '" + fj.at("unit").get<std::string>() + "'");
        continue;
      }
      try {
        if (fj.contains("magnitude")) {
          flow.quantity = Quantity(get_number(fj, "magnitude", fwhere), *unit);
        } else if (*unit == Unit::MassDistance) {
          flow.quantity = Quantity::mass_distance(get_number(fj, "mass_kg", fwhere), get_number(fj, "distance_km", fwhere));
        } else {
          throw InputError(fwhere + ": missing field 'magnitude'");
        }
      } catch (const ValidationError& e) {
        out.report.add(Severity::Error, fwhere, e.what());
        continue;
      }
      try {
        flow.boundary = classify_flow(flow, rubric);
      } catch (const ValidationError& e) {
        out.report.add(Severity::Error, fwhere, e.what());
        continue;
      }
      stage.flows.push_back(std::move(flow));
    }
    sys.stages.push_back(std::move(stage));
  }
  out.system = std::move(sys);
  return out;
}

ProductSystem parse_system(const Json& doc, const BoundaryRubric& rubric) {
  auto parsed = parse_system_lenient(doc, rubric);
  if (!parsed.report.valid()) {
    const auto& f = parsed.report.findings.front();
    throw ValidationError(f.where + ": " + f.message);
  }
  return std::move(*parsed.system);
}

ProductSystem load_system(const std::filesystem::path& path, const BoundaryRubric& rubric) {
  return parse_system(read_json_file(path), rubric);
}

Json to_json(const ProductSystem& sys) {
  Json stages = Json::array();
  for (const auto& stage : sys.stages) {
    Json flows = Json::array();
    for (const auto& f : stage.flows) {
      Json fj{{"name", f.name},
              {"direction", to_string(f.direction)},
              {"magnitude", f.quantity.magnitude()},
              {"unit", unit_symbol(f.quantity.unit())},
              {"region", f.region},
              {"category", f.category},
              {"quality", quality_json(f.quality.dims)},
              {"time_range", {f.time_range.first, f.time_range.last}}};
      if (!f.factor.empty()) fj["factor"] = f.factor;
      flows.push_back(std::move(fj));
    }
    Json sj{{"name", stage.name}, {"flows", std::move(flows)}};
    if (stage.manual) sj["manual"] = true;
    stages.push_back(std::move(sj));
  }
  return Json{{"name", sys.name},
              {"kind", sys.kind == SystemKind::Virgin ? "virgin" : "remanufactured"},
              {"device_mass_kg", sys.device_mass_kg},
              {"functional_unit", sys.functional_unit},
              {"stages", std::move(stages)}};
}

FactorStore parse_factors(const Json& doc, const GwpTable* gwp) {
  const std::string where = "factor document";
  if (doc.is_object() && doc.empty()) return FactorStore{};
  std::vector<EmissionFactor> factors;
  for (const auto& fj : get_array(doc, "factors", where)) {
    EmissionFactor f;
    f.flow_name = get_string(fj, "flow", where);
    const std::string fwhere = "factor '" + f.flow_name + "'";
    f.region = get_string(fj, "region", fwhere);
    const auto unit_name = get_string(fj, "unit", fwhere);
    auto unit = parse_unit(unit_name);
    if (!unit) throw ValidationError(fwhere + ": unknown unit '" + unit_name + "'");
    f.unit = *unit;
    if (fj.contains("value")) {
      f.value = get_number(fj, "value", fwhere);
    } else if (fj.contains("gases")) {
      if (gwp == nullptr) throw InputError(fwhere + ": gas-based factor needs a GWP table");
      std::vector<GasMass> masses;
      for (const auto& gj : get_array(fj, "gases", fwhere))
        masses.emplace_back(get_string(gj, "gas", fwhere), get_number(gj, "kg", fwhere));
      f.value = gwp_aggregate(masses, *gwp);
    } else {
      throw InputError(fwhere + ": needs 'value' or 'gases'");
    }
    f.source = get_string_or(fj, "source", "", fwhere);
    f.time_range = parse_years(fj, fwhere);
    factors.push_back(std::move(f));
  }
  return FactorStore(std::move(factors));
}

FactorStore load_factors(const std::filesystem::path& path, const GwpTable* gwp) {
  return parse_factors(read_json_file(path), gwp);
}

GwpTable parse_gwp(const Json& doc) {
  std::vector<GwpEntry> entries;
  for (const auto& gj : get_array(doc, "gwp", "GWP table"))
    entries.push_back({get_string(gj, "gas", "GWP entry"), get_number(gj, "value", "GWP entry")});
  return GwpTable(std::move(entries));
}

BoundaryRubric parse_rubric(const Json& doc) {
  std::map<std::string, BoundaryClass, std::less<>> entries;
  for (const auto& rj : get_array(doc, "rubric", "rubric")) {
    auto category = get_string(rj, "category", "rubric entry");
    auto cls = get_string(rj, "class", "rubric entry '" + category + "'");
    BoundaryClass c;
    if (cls == "attributable-included") c = BoundaryClass::AttributableIncluded;
    else if (cls == "non-attributable-included") c = BoundaryClass::NonAttributableIncluded;
    else if (cls == "excluded") c = BoundaryClass::Excluded;
    else throw InputError("rubric entry '" + category + "': unknown class '" + cls + "'");
    if (!entries.emplace(category, c).second) throw ValidationError("duplicate rubric category '" + category + "'");
  }
  return BoundaryRubric(std::move(entries));
}

CategoryMap parse_categories(const Json& doc) {
  std::vector<std::pair<std::string, std::vector<std::string>>> cats;
  for (const auto& cj : get_array(doc, "categories", "category map")) {
    auto name = get_string(cj, "name", "category");
    std::vector<std::string> flows;
    for (const auto& f : get_array(cj, "flows", "category '" + name + "'")) {
      if (!f.is_string()) throw InputError("category '" + name + "': flow names must be strings");
      flows.push_back(f.get<std::string>());
    }
    cats.emplace_back(std::move(name), std::move(flows));
  }
  return CategoryMap(std::move(cats));
}

std::vector<LocationProfile> parse_locations(const Json& doc) {
  std::vector<LocationProfile> out;
  std::set<std::string> codes;
  for (const auto& lj : get_array(doc, "locations", "location document")) {
    LocationProfile p;
    p.code = get_string(lj, "code", "location");
    const std::string where = "location '" + p.code + "'";
    parse_location(p.code);
    if (!codes.insert(p.code).second) throw ValidationError("duplicate " + where);
    for (const auto& leg : get_array(lj, "legs", where)) {
      TransportLeg t;
      t.mode = get_string(leg, "mode", where + " leg");
      t.distance_km = get_number(leg, "distance_km", where + " leg");
      t.region = get_string(leg, "region", where + " leg");
      auto dir = get_string(leg, "direction", where + " leg");
      if (dir == "inbound") t.direction = LegDirection::Inbound;
      else if (dir == "outbound") t.direction = LegDirection::Outbound;
      else throw InputError(where + ": leg direction must be 'inbound' or 'outbound'");
      p.legs.push_back(std::move(t));
    }
    if (lj.contains("electricity") && !lj.at("electricity").is_null()) {
      const auto& ej = lj.at("electricity");
      ElectricityOverride e;
      e.region = get_string(ej, "region", where + " electricity");
      e.factor = get_string_or(ej, "factor", std::string(kElectricityFlow), where + " electricity");
      for (const auto& s : get_array(ej, "stages", where + " electricity")) e.stages.push_back(s.get<std::string>());
      p.electricity = std::move(e);
    }
    if (lj.contains("incineration_region") && !lj.at("incineration_region").is_null())
      p.incineration_region = get_string(lj, "incineration_region", where);
    if (lj.contains("constraints"))
      for (const auto& c : get_array(lj, "constraints", where)) p.constraints.push_back(c.get<std::string>());
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ScenarioParams> parse_scenarios(const Json& doc) {
  std::vector<ScenarioParams> out;
  std::set<std::string> names;
  for (const auto& sj : get_array(doc, "scenarios", "scenario document")) {
    ScenarioParams p;
    p.name = get_string(sj, "name", "scenario");
    const std::string where = "scenario '" + p.name + "'";
    if (!names.insert(p.name).second) throw ValidationError("duplicate " + where);
    p.location = parse_location(get_string(sj, "location", where));
    p.rejection_rate = get_number(sj, "rejection_rate", where);
    const auto turns = get_integer(sj, "turns", where);
    if (turns < 1 || turns > 1'000'000) throw ValidationError(where + ": turns must be >= 1");
    p.turns = static_cast<int>(turns);
    p.rejection_mode = parse_rejection_mode(get_string_or(sj, "rejection_mode", "amortized", where));
    if (p.rejection_rate < 0.0 || p.rejection_rate > 1.0)
      throw ValidationError(where + ": rejection_rate must lie in [0, 1]");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SchemeSpec> parse_schemes(const Json& doc) {
  auto one = [](const Json& sj, std::string name) {
    SchemeSpec s;
    s.name = get_string_or(sj, "name", std::move(name), "scheme");
    const std::string where = "scheme '" + s.name + "'";
    s.uses = get_integer(sj, "uses", where);
    const auto turns = get_integer(sj, "turns", where);
    if (turns < 1 || turns > 1'000'000) throw ValidationError(where + ": turns must be >= 1");
    s.turns = static_cast<int>(turns);
    s.rejection_rate = get_number(sj, "rejection_rate", where);
    s.e_virgin = get_number(sj, "e_virgin", where);
    s.e_reman = get_number(sj, "e_reman", where);
    try {
      check(s);
    } catch (const ComputationError& e) {
      throw ValidationError(e.what());
    }
    return s;
  };
  std::vector<SchemeSpec> out;
  if (doc.is_object() && doc.contains("schemes")) {
    std::set<std::string> names;
    for (const auto& sj : get_array(doc, "schemes", "scheme document")) {
      out.push_back(one(sj, "scheme-" + std::to_string(out.size() + 1)));
      if (!names.insert(out.back().name).second) throw ValidationError("duplicate scheme '" + out.back().name + "'");
    }
  } else {
    out.push_back(one(doc, "scheme"));
  }
  return out;
}

}  // namespace remanlca::io
