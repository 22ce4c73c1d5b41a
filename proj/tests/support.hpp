#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "remanlca/core_model.hpp"
#include "remanlca/factor_store.hpp"
#include "remanlca/impact.hpp"
#include "remanlca/io.hpp"
#include "remanlca/scenario.hpp"

namespace testing {

inline std::filesystem::path data_path(std::string_view name) {
  return std::filesystem::path(REMANLCA_DATA_DIR) / name;
}

/// Reference inventories, loaded once per test binary.
struct Fixtures {
  remanlca::ProductSystem virgin;
  remanlca::ProductSystem reman;
  remanlca::FactorStore store;
  std::vector<remanlca::LocationProfile> locations;

  remanlca::ScenarioContext context() const {
    return {&virgin, &reman, &store, &locations, &remanlca::CategoryMap::standard()};
  }
};

inline const Fixtures& fixtures() {
  static const Fixtures f = [] {
    namespace io = remanlca::io;
    return Fixtures{io::load_system(data_path("virgin_catheter.json")),
                    io::load_system(data_path("reman_catheter.json")),
                    io::load_factors(data_path("factors.json")),
                    io::parse_locations(io::read_json_file(data_path("locations.json")))};
  }();
  return f;
}

inline remanlca::MaterialFlow make_flow(std::string name, std::string stage, remanlca::Quantity q,
                                        std::string region = "GLO", std::string category = "raw-materials") {
  remanlca::MaterialFlow f;
  f.name = std::move(name);
  f.stage = std::move(stage);
  f.quantity = q;
  f.region = std::move(region);
  f.category = std::move(category);
  f.quality = remanlca::score_quality(remanlca::QualityDimensions::uniform(remanlca::QualityRating::Good));
  f.time_range = {2010, 2020};
  return f;
}

inline remanlca::ProductSystem make_system(std::string name, remanlca::SystemKind kind,
                                           std::vector<remanlca::LifeStage> stages) {
  remanlca::ProductSystem s;
  s.name = std::move(name);
  s.kind = kind;
  s.device_mass_kg = 0.1;
  s.stages = std::move(stages);
  return s;
}

/// Sum of rows, the way a reader of the breakdown table would add them up.
inline double sum_rows(const remanlca::EmissionBreakdown& bd) {
  double s = 0.0;
  for (const auto& r : bd.per_flow) s += r.kg_co2eq;
  return s;
}

struct GoldenRow {
  const char* stage;
  const char* flow;
  double kg_co2eq;
  double percent;  // printed proportion column
};

// Per-flow emissions of the virgin and remanufactured catheters as published
// (kg CO2eq per functional unit, five decimals).
inline const std::vector<GoldenRow>& virgin_golden() {
  static const std::vector<GoldenRow> rows{
      {"Production", "polyamide", 0.02934, 1.91},
      {"Production", "ethylene glycol", 0.00261, 0.17},
      {"Production", "polyethylene LD", 0.00077, 0.05},
      {"Production", "polysulfone", 0.85250, 55.55},
      {"Production", "polyurethane", 0.00419, 0.27},
      {"Production", "electricity", 0.01077, 0.70},
      {"Sterilisation", "carbon dioxide", 0.00229, 0.15},
      {"Sterilisation", "ethylene oxide", 0.00034, 0.02},
      {"Sterilisation", "electricity", 0.14908, 9.72},
      {"Packaging", "polyethylene HD", 0.04798, 3.13},
      {"Packaging", "carton box", 0.10390, 6.77},
      {"Transport", "container ship", 0.02102, 1.37},
      {"Transport", "lorry", 0.01510, 0.98},
      {"Use", "electricity", 0.01586, 1.04},
      {"Incineration", "plastic incineration", 0.27902, 18.18},
  };
  return rows;
}

inline const std::vector<GoldenRow>& reman_golden() {
  static const std::vector<GoldenRow> rows{
      {"Transport", "container ship", 0.04203, 6.87},
      {"Transport", "lorry", 0.03020, 4.93},
      {"Remanufacturing", "hydrogen peroxide", 0.03497, 5.71},
      {"Remanufacturing", "sodium bicarbonate", 0.01861, 3.04},
      {"Remanufacturing", "sodium cumene sulphonate", 0.00084, 0.14},
      {"Remanufacturing", "tap water", 0.00232, 0.38},
      {"Remanufacturing", "water, ultrapure", 0.00368, 0.60},
      {"Remanufacturing", "electricity", 0.08561, 13.98},
      {"Incineration", "plastic incineration", 0.09426, 15.40},
      {"Sterilisation", "carbon dioxide", 0.00229, 0.37},
      {"Sterilisation", "ethylene oxide", 0.00034, 0.06},
      {"Sterilisation", "electricity", 0.14919, 25.24},
      {"Packaging", "polyethylene HD", 0.04798, 7.84},
      {"Packaging", "carton box", 0.08403, 13.73},
      {"Use", "electricity", 0.01586, 2.59},
  };
  return rows;
}

struct GoldenStage {
  const char* stage;
  double kg_co2eq;
};

inline const std::vector<GoldenStage>& virgin_stage_golden() {
  static const std::vector<GoldenStage> rows{{"Production", 0.90018}, {"Sterilisation", 0.15171},
                                            {"Packaging", 0.15188},  {"Transport", 0.03612},
                                            {"Use", 0.01586},        {"Incineration", 0.27902}};
  return rows;
}

inline const std::vector<GoldenStage>& reman_stage_golden() {
  static const std::vector<GoldenStage> rows{{"Transport", 0.07223},     {"Remanufacturing", 0.14603},
                                            {"Incineration", 0.09426},  {"Sterilisation", 0.15182},
                                            {"Packaging", 0.13201},     {"Use", 0.01586}};
  return rows;
}

inline const remanlca::FlowEmission* find_row(const remanlca::EmissionBreakdown& bd, std::string_view stage,
                                              std::string_view flow) {
  for (const auto& r : bd.per_flow)
    if (r.stage == stage && r.flow == flow) return &r;
  return nullptr;
}

}  // namespace testing
