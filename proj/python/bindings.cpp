#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "remanlca/buyback.hpp"
#include "remanlca/errors.hpp"
#include "remanlca/impact.hpp"
#include "remanlca/io.hpp"
#include "remanlca/metrics.hpp"
#include "remanlca/scenario.hpp"

namespace py = pybind11;
using namespace remanlca;

namespace {

py::dict breakdown_dict(const EmissionBreakdown& bd) {
  py::dict d;
  d["system"] = bd.system;
  d["total"] = bd.total;
  py::dict stages;
  for (const auto& [name, value] : bd.per_stage) stages[py::str(name)] = value;
  d["per_stage"] = stages;
  d["per_category"] = bd.per_category;
  py::list flows;
  for (const auto& f : bd.per_flow) {
    py::dict row;
    row["stage"] = f.stage;
    row["flow"] = f.flow;
    row["category"] = f.category;
    row["kg_co2eq"] = f.kg_co2eq;
    row["proportion"] = f.proportion;
    flows.append(row);
  }
  d["per_flow"] = flows;
  return d;
}

py::dict stats_dict(const FleetStats& s) {
  py::dict d;
  d["mean"] = s.mean;
  d["stddev"] = s.stddev;
  d["ci_low"] = s.ci_low;
  d["ci_high"] = s.ci_high;
  return d;
}

SchemeSpec make_spec(std::int64_t uses, int turns, double rejection_rate, double e_virgin, double e_reman) {
  return SchemeSpec{"scheme", uses, turns, rejection_rate, e_virgin, e_reman};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Life-cycle emission engine for virgin and remanufactured single-use devices";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);

  py::class_<ProductSystem>(m, "ProductSystem")
      .def_readonly("name", &ProductSystem::name)
      .def_readonly("device_mass_kg", &ProductSystem::device_mass_kg)
      .def_property_readonly("kind", [](const ProductSystem& s) { return std::string(to_string(s.kind)); })
      .def_property_readonly("stage_names",
                             [](const ProductSystem& s) {
                               std::vector<std::string> names;
                               for (const auto& st : s.stages) names.push_back(st.name);
                               return names;
                             })
      .def_property_readonly("flow_count", &ProductSystem::flow_count)
      .def("to_json", [](const ProductSystem& s) { return io::to_json(s).dump(); });

  py::class_<FactorStore>(m, "FactorStore")
      .def("__len__", &FactorStore::size)
      .def("lookup", [](const FactorStore& s, const std::string& flow, const std::string& region,
                        const std::string& unit) {
        auto u = parse_unit(unit);
        if (!u) throw InputError("unknown unit '" + unit + "'");
        auto hit = s.lookup(flow, region, *u);
        return py::make_tuple(hit.factor->value, hit.used_fallback);
      });

  py::class_<LocationProfile>(m, "LocationProfile").def_readonly("code", &LocationProfile::code);

  m.def("load_system", [](const std::filesystem::path& p) { return io::load_system(p); }, py::arg("path"));
  m.def("parse_system", [](const std::string& text) { return io::parse_system(io::Json::parse(text)); },
        py::arg("json_text"));
  m.def("load_factors", [](const std::filesystem::path& p) { return io::load_factors(p); }, py::arg("path"));
  m.def("load_locations", [](const std::filesystem::path& p) { return io::parse_locations(io::read_json_file(p)); },
        py::arg("path"));

  m.def(
      "validate_system",
      [](const ProductSystem& s, const FactorStore* store) {
        auto rep = validate_system(s, store);
        py::list out;
        for (const auto& f : rep.findings) out.append(py::make_tuple(std::string(to_string(f.severity)), f.where, f.message));
        return py::make_tuple(rep.valid(), out);
      },
      py::arg("system"), py::arg("store") = nullptr);

  m.def(
      "system_emissions",
      [](const ProductSystem& s, const FactorStore& store, bool categories) {
        return breakdown_dict(system_emissions(s, store, categories ? &CategoryMap::standard() : nullptr));
      },
      py::arg("system"), py::arg("store"), py::arg("categories") = true);

  m.def(
      "compare_systems",
      [](const ProductSystem& a, const ProductSystem& b, const FactorStore& store) {
        const auto& map = CategoryMap::standard();
        auto cmp = compare_systems(system_emissions(a, store, &map), system_emissions(b, store, &map), map);
        py::dict d;
        py::dict deltas;
        for (const auto& r : cmp.rows) deltas[py::str(r.category)] = r.delta;
        d["deltas"] = deltas;
        d["total_delta"] = cmp.total_delta;
        d["relative_saving"] = cmp.relative_saving;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("store"));

  m.def(
      "apply_rejection",
      [](const ProductSystem& s, double r, const std::string& mode) { return apply_rejection(s, r, parse_rejection_mode(mode)); },
      py::arg("system"), py::arg("rejection_rate"), py::arg("mode") = "amortized");
  m.def("apply_location", &apply_location, py::arg("system"), py::arg("profile"), py::arg("store"));

  m.def(
      "evaluate_scenario",
      [](const ProductSystem& virgin, const ProductSystem& reman, const FactorStore& store,
         const std::vector<LocationProfile>& locations, const std::string& location, double rejection_rate, int turns,
         const std::string& mode) {
        ScenarioContext ctx{&virgin, &reman, &store, &locations, &CategoryMap::standard()};
        ScenarioParams p{"scenario", parse_location(location), rejection_rate, turns, parse_rejection_mode(mode)};
        auto r = evaluate_scenario(p, ctx);
        py::dict d;
        d["e_virgin"] = r.e_virgin;
        d["e_reman"] = r.e_reman;
        d["per_life"] = r.per_life;
        d["per_turn"] = r.per_turn;
        d["life_saving"] = r.life_saving;
        return d;
      },
      py::arg("virgin"), py::arg("reman"), py::arg("store"), py::arg("locations"), py::arg("location"),
      py::arg("rejection_rate"), py::arg("turns"), py::arg("mode") = "amortized");

  m.def("per_life", [](double ev, double er, int n) { return per_life(TurnProfile(ev, er, n)); },
        py::arg("e_virgin"), py::arg("e_reman"), py::arg("turns"));
  m.def("per_turn", [](double ev, double er, int n) { return per_turn(TurnProfile(ev, er, n)); },
        py::arg("e_virgin"), py::arg("e_reman"), py::arg("turns"));
  m.def("life_saving", [](double ev, double er, int n) { return life_saving(TurnProfile(ev, er, n)); },
        py::arg("e_virgin"), py::arg("e_reman"), py::arg("turns"));

  m.def("solve_injection", &solve_injection, py::arg("uses"), py::arg("turns"), py::arg("rejection_rate"));
  m.def(
      "scheme_emissions",
      [](std::int64_t uses, int turns, double r, double ev, double er) {
        auto res = scheme_emissions(make_spec(uses, turns, r, ev, er));
        py::dict d;
        d["injection"] = res.injection;
        d["total"] = res.total;
        d["per_turn"] = res.per_turn;
        d["cohort_uses"] = res.cohort_uses;
        return d;
      },
      py::arg("uses"), py::arg("turns"), py::arg("rejection_rate"), py::arg("e_virgin"), py::arg("e_reman"));
  m.def(
      "scheme_saving",
      [](std::int64_t uses, int turns, double r, double ev, double er) {
        return scheme_saving(make_spec(uses, turns, r, ev, er));
      },
      py::arg("uses"), py::arg("turns"), py::arg("rejection_rate"), py::arg("e_virgin"), py::arg("e_reman"));
  m.def(
      "simulate_fleet",
      [](std::int64_t uses, int turns, double r, double ev, double er, std::uint64_t seed, int replications,
         std::int64_t injection) {
        FleetSimulation sim;
        {
          py::gil_scoped_release release;
          sim = simulate_fleet(make_spec(uses, turns, r, ev, er), seed, replications, injection);
        }
        py::dict d;
        d["injection"] = sim.injection;
        d["uses"] = stats_dict(sim.uses);
        d["emissions"] = stats_dict(sim.emissions);
        d["uses_per_replication"] = sim.uses_per_replication;
        return d;
      },
      py::arg("uses"), py::arg("turns"), py::arg("rejection_rate"), py::arg("e_virgin"), py::arg("e_reman"),
      py::arg("seed"), py::arg("replications"), py::arg("injection") = 0);

  m.def(
      "gwp_aggregate",
      [](const std::vector<GasMass>& masses, const std::map<std::string, double>& table) {
        std::vector<GwpEntry> entries;
        for (const auto& [gas, v] : table) entries.push_back({gas, v});
        return gwp_aggregate(masses, GwpTable(std::move(entries)));
      },
      py::arg("masses"), py::arg("gwp"));

#ifdef REMANLCA_VERSION
  m.attr("__version__") = REMANLCA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
