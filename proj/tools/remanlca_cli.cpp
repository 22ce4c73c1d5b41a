// remanlca: command-line front end for the emission engine.
//
//   remanlca validate <files...>
//   remanlca compute <system.json> [--quality]
//   remanlca compare <a.json> <b.json>
//   remanlca sweep --param R --grid 0,0.15,0.35,0.7
//   remanlca scenario <scenarios.json>
//   remanlca buyback <schemes.json> [--seed S --replications K]
//
// Exit codes: 0 success, 1 validation failure, 2 input/parse error, 3 computation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "remanlca/buyback.hpp"
#include "remanlca/errors.hpp"
#include "remanlca/impact.hpp"
#include "remanlca/io.hpp"
#include "remanlca/report.hpp"
#include "remanlca/scenario.hpp"

#ifndef REMANLCA_DATA_DIR
#define REMANLCA_DATA_DIR "data"
#endif

namespace {

using namespace remanlca;
namespace fs = std::filesystem;

constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;

std::string data_file(const char* name) { return (fs::path(REMANLCA_DATA_DIR) / name).string(); }

struct Globals {
  std::string factors = data_file("factors.json");
  std::string categories = data_file("categories.json");
  std::string rubric;
  std::string gwp;
  std::string format = "csv";
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

BoundaryRubric load_rubric(const Globals& g) {
  if (g.rubric.empty()) return BoundaryRubric::nhs_default();
  return io::parse_rubric(io::read_json_file(g.rubric));
}

std::optional<GwpTable> load_gwp(const Globals& g) {
  if (g.gwp.empty()) return std::nullopt;
  return io::parse_gwp(io::read_json_file(g.gwp));
}

FactorStore load_store(const Globals& g) {
  auto gwp = load_gwp(g);
  return io::load_factors(g.factors, gwp ? &*gwp : nullptr);
}

CategoryMap load_categories(const Globals& g) { return io::parse_categories(io::read_json_file(g.categories)); }

std::string fingerprint_files(const std::vector<std::string>& paths) {
  std::string all;
  for (const auto& p : paths) all += io::fingerprint(io::read_text_file(p));
  return io::fingerprint(all);
}

void emit(const Globals& g, report::ReportDocument doc, const std::vector<std::string>& inputs) {
  doc.metadata.emplace_back("inputs", fingerprint_files(inputs));
  Output out(g.out);
  out.stream() << report::render(doc, report::parse_format(g.format));
}

// validate -------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::vector<std::string>& paths, bool quiet) {
  Output out(g.out);
  auto& os = out.stream();
  const auto rubric = load_rubric(g);
  std::optional<FactorStore> store;
  bool any_error = false;

  auto print = [&](const std::string& file, const ValidationReport& rep) {
    for (const auto& f : rep.findings)
      if (!quiet || f.severity != Severity::Info)
        os << to_string(f.severity) << '\t' << file << '\t' << f.where << '\t' << f.message << '\n';
    os << file << ": " << (rep.valid() ? "valid" : "invalid") << " (" << rep.error_count() << " errors, "
       << rep.warning_count() << " warnings)\n";
    any_error = any_error || !rep.valid();
  };

  for (const auto& path : paths) {
    const auto doc = io::read_json_file(path);
    ValidationReport rep;
    try {
      if (doc.is_object() && doc.contains("stages")) {
        auto parsed = io::parse_system_lenient(doc, rubric);
        rep = parsed.report;
        if (!store) store = load_store(g);
        rep.merge(validate_system(*parsed.system, &*store));
      } else if (doc.is_object() && doc.contains("factors")) {
        auto gwp = load_gwp(g);
        io::parse_factors(doc, gwp ? &*gwp : nullptr);
      } else if (doc.is_object() && doc.contains("scenarios")) {
        io::parse_scenarios(doc);
      } else if (doc.is_object() && (doc.contains("schemes") || doc.contains("uses"))) {
        io::parse_schemes(doc);
      } else if (doc.is_object() && doc.contains("locations")) {
        for (const auto& p : io::parse_locations(doc))
          if (p.legs.empty()) rep.add(Severity::Warning, "location '" + p.code + "'", "no transport legs");
      } else if (doc.is_object() && doc.contains("categories")) {
        io::parse_categories(doc);
      } else if (doc.is_object() && doc.contains("gwp")) {
        io::parse_gwp(doc);
      } else if (doc.is_object() && doc.contains("rubric")) {
        io::parse_rubric(doc);
      } else {
        throw InputError(path + ": unrecognised document type");
      }
    } catch (const ValidationError& e) {
      rep.add(Severity::Error, path, e.what());
    }
    print(path, rep);
  }
  return any_error ? kExitValidation : 0;
}

// compute / compare ------------------------------------------------------------

int cmd_compute(const Globals& g, const std::string& path, bool quality) {
  const auto sys = io::load_system(path, load_rubric(g));
  if (quality) {
    emit(g, report::quality_document(sys), {path});
    return 0;
  }
  const auto store = load_store(g);
  const auto cats = load_categories(g);
  ComputationLog log;
  const auto bd = system_emissions(sys, store, &cats, &log);
  auto doc = report::breakdown_document(bd);
  for (const auto& entry : log.entries) doc.metadata.emplace_back("log", entry);
  emit(g, std::move(doc), {path, g.factors, g.categories});
  return 0;
}

int cmd_compare(const Globals& g, const std::string& a_path, const std::string& b_path) {
  const auto rubric = load_rubric(g);
  const auto a = io::load_system(a_path, rubric);
  const auto b = io::load_system(b_path, rubric);
  const auto store = load_store(g);
  const auto cats = load_categories(g);
  const auto cmp = compare_systems(system_emissions(a, store, &cats), system_emissions(b, store, &cats), cats);
  emit(g, report::comparison_document(cmp, a.name, b.name), {a_path, b_path, g.factors, g.categories});
  return 0;
}

// sweep / scenario -------------------------------------------------------------

struct ScenarioInputs {
  std::string virgin = data_file("virgin_catheter.json");
  std::string reman = data_file("reman_catheter.json");
  std::string locations = data_file("locations.json");
};

struct LoadedContext {
  ProductSystem virgin;
  ProductSystem reman;
  FactorStore store;
  std::vector<LocationProfile> locations;
  CategoryMap categories;

  ScenarioContext view() const { return {&virgin, &reman, &store, &locations, &categories}; }
};

LoadedContext load_context(const Globals& g, const ScenarioInputs& in) {
  const auto rubric = load_rubric(g);
  return {io::load_system(in.virgin, rubric), io::load_system(in.reman, rubric), load_store(g),
          io::parse_locations(io::read_json_file(in.locations)), load_categories(g)};
}

std::vector<std::string> split_grid(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

struct SweepArgs {
  std::string param;
  std::string grid;
  std::string location = "USA";
  double rejection_rate = 0.15;
  int turns = 1;
  std::string mode;
};

int cmd_sweep(const Globals& g, const ScenarioInputs& in, const SweepArgs& a) {
  const auto param = parse_sweep_param(a.param);
  ScenarioParams base;
  base.name = "sweep";
  base.location = parse_location(a.location);
  base.rejection_rate = a.rejection_rate;
  base.turns = a.turns;
  base.rejection_mode = a.mode.empty() ? default_sweep_mode(param) : parse_rejection_mode(a.mode);
  const auto ctx = load_context(g, in);
  auto series = sweep_univariate(param, split_grid(a.grid), base, ctx.view());
  auto doc = report::sweep_document(param, series);
  doc.metadata.emplace_back("base", "location " + std::string(to_string(base.location)) + ", rejection_rate " +
                                        report::fmt5(base.rejection_rate) + ", turns " + std::to_string(base.turns) +
                                        ", rejection_mode " + std::string(to_string(base.rejection_mode)));
  emit(g, std::move(doc), {in.virgin, in.reman, in.locations, g.factors});
  return 0;
}

int cmd_scenario(const Globals& g, const ScenarioInputs& in, const std::string& path) {
  const auto scenarios = io::parse_scenarios(io::read_json_file(path));
  std::vector<ScenarioResult> results;
  if (!scenarios.empty()) {
    const auto ctx = load_context(g, in);
    results = run_scenarios(scenarios, ctx.view());
  }
  emit(g, report::scenario_document(results), {path, in.virgin, in.reman, in.locations, g.factors});
  return 0;
}

// buyback ---------------------------------------------------------------------

struct BuybackArgs {
  std::string path = data_file("schemes.json");
  std::optional<double> e_virgin;
  std::optional<double> e_reman;
  std::optional<std::uint64_t> seed;
  int replications = 0;
  unsigned threads = 1;
};

int cmd_buyback(const Globals& g, const BuybackArgs& a) {
  auto specs = io::parse_schemes(io::read_json_file(a.path));
  std::vector<FleetSimulation> sims;
  sims.reserve(specs.size());
  std::vector<report::SchemeRow> rows;
  for (auto& spec : specs) {
    if (a.e_virgin) spec.e_virgin = *a.e_virgin;
    if (a.e_reman) spec.e_reman = *a.e_reman;
    report::SchemeRow row{spec, scheme_emissions(spec), scheme_saving(spec), nullptr};
    if (a.replications > 0) {
      sims.push_back(simulate_fleet(spec, a.seed.value_or(0), a.replications, 0, a.threads));
      row.simulation = &sims.back();
    }
    rows.push_back(row);
  }
  emit(g, report::scheme_document(rows), {a.path});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Life-cycle emission engine for virgin and remanufactured single-use devices"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--factors", g.factors, "Emission factor document")->capture_default_str();
  app.add_option("--categories", g.categories, "Impact category map")->capture_default_str();
  app.add_option("--rubric", g.rubric, "Boundary rubric document (default: built-in NHS rubric)");
  app.add_option("--gwp", g.gwp, "GWP table, needed for gas-based factors");
  app.add_option("--format", g.format, "Output format: csv or md")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  ScenarioInputs scen;
  auto add_scenario_inputs = [&](CLI::App* sub) {
    sub->add_option("--virgin", scen.virgin, "Virgin product system")->capture_default_str();
    sub->add_option("--reman", scen.reman, "Remanufactured product system")->capture_default_str();
    sub->add_option("--locations", scen.locations, "Location profiles")->capture_default_str();
  };

  std::vector<std::string> validate_paths;
  bool quiet = false;
  auto* validate = app.add_subcommand("validate", "Validate input documents");
  validate->add_option("files", validate_paths, "JSON documents")->required();
  validate->add_flag("--quiet", quiet, "Hide info-level findings");

  std::string compute_path;
  bool quality = false;
  auto* compute = app.add_subcommand("compute", "Emission breakdown of one product system");
  compute->add_option("system", compute_path, "Product system JSON")->required();
  compute->add_flag("--quality", quality, "Emit the data-quality summary instead");

  std::string cmp_a, cmp_b;
  auto* compare = app.add_subcommand("compare", "Per-category comparison of two systems (b - a)");
  compare->add_option("a", cmp_a, "Reference system")->required();
  compare->add_option("b", cmp_b, "Alternative system")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Univariate sensitivity sweep over L, R or N");
  sweep->add_option("--param", sweep_args.param, "L, R or N")->required();
  sweep->add_option("--grid", sweep_args.grid, "Comma-separated grid values")->required();
  sweep->add_option("--location", sweep_args.location, "Base location")->capture_default_str();
  sweep->add_option("--rejection-rate", sweep_args.rejection_rate, "Base rejection rate")->capture_default_str();
  sweep->add_option("--turns", sweep_args.turns, "Base number of turns")->capture_default_str();
  sweep->add_option("--mode", sweep_args.mode, "amortized or per-success (default: per-success for R)");
  add_scenario_inputs(sweep);

  std::string scenario_path;
  auto* scenario = app.add_subcommand("scenario", "Multivariate named scenarios");
  scenario->add_option("scenarios", scenario_path, "Scenario JSON")->required();
  add_scenario_inputs(scenario);

  BuybackArgs bb;
  auto* buyback = app.add_subcommand("buyback", "Buy-back scheme injection and emissions");
  buyback->add_option("schemes", bb.path, "Scheme JSON")->capture_default_str();
  buyback->add_option("--e-virgin", bb.e_virgin, "Override virgin per-turn emission");
  buyback->add_option("--e-reman", bb.e_reman, "Override remanufactured per-turn emission");
  buyback->add_option("--seed", bb.seed, "Seed for the fleet simulation");
  buyback->add_option("--replications", bb.replications, "Fleet simulation replications (0 = analytic only)");
  buyback->add_option("--threads", bb.threads, "Worker threads for the simulation")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(g, validate_paths, quiet);
    if (*compute) return cmd_compute(g, compute_path, quality);
    if (*compare) return cmd_compare(g, cmp_a, cmp_b);
    if (*sweep) return cmd_sweep(g, scen, sweep_args);
    if (*scenario) return cmd_scenario(g, scen, scenario_path);
    if (*buyback) return cmd_buyback(g, bb);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return kExitComputation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
