#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "remanlca/buyback.hpp"
#include "remanlca/core_model.hpp"
#include "remanlca/factor_store.hpp"
#include "remanlca/impact.hpp"
#include "remanlca/scenario.hpp"

namespace remanlca::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
Json read_json_file(const std::filesystem::path& path);

/// Raw file contents, for fingerprinting inputs.
std::string read_text_file(const std::filesystem::path& path);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fingerprint(const std::string& bytes);

// Product systems ------------------------------------------------------------
//
// {name, kind, device_mass_kg, functional_unit?, stages:[{name, manual?, flows:[
//   {name, direction, magnitude | (mass_kg, distance_km), unit, region, category,
//    quality: {technology, age, geography, completeness, reliability} | "fair",
//    time_range:[y0, y1], factor?}]}]}

struct SystemParse {
  std::optional<ProductSystem> system;
  ValidationReport report;  // problems found while building the typed system
};

/// Builds the system, recording invariant breaches (negative magnitudes, unknown
/// units or categories) in the report instead of throwing. Missing or mistyped
/// fields are still InputError.
SystemParse parse_system_lenient(const Json& doc, const BoundaryRubric& rubric = BoundaryRubric::nhs_default());

/// Strict variant: ValidationError if the lenient parse reported any error.
ProductSystem parse_system(const Json& doc, const BoundaryRubric& rubric = BoundaryRubric::nhs_default());
ProductSystem load_system(const std::filesystem::path& path,
                          const BoundaryRubric& rubric = BoundaryRubric::nhs_default());
Json to_json(const ProductSystem& sys);

// Factors: {factors:[{flow, region, unit, value | gases:[{gas, kg}], source, time_range}]}
FactorStore parse_factors(const Json& doc, const GwpTable* gwp = nullptr);
FactorStore load_factors(const std::filesystem::path& path, const GwpTable* gwp = nullptr);

// GWP table: {gwp:[{gas, value}]}
GwpTable parse_gwp(const Json& doc);

// Boundary rubric: {rubric:[{category, class}]}
BoundaryRubric parse_rubric(const Json& doc);

// Category map: {categories:[{name, flows:[...]}]}
CategoryMap parse_categories(const Json& doc);

// Location profiles: {locations:[{code, legs:[{mode, distance_km, region, direction}],
//   electricity?: {region, factor?, stages:[...]}, incineration_region?, constraints?:[...]}]}
std::vector<LocationProfile> parse_locations(const Json& doc);

// Scenarios: {scenarios:[{name, location, rejection_rate, turns, rejection_mode?}]}
std::vector<ScenarioParams> parse_scenarios(const Json& doc);

// Schemes: {uses, turns, rejection_rate, e_virgin, e_reman} or {schemes:[{name, ...}]}
std::vector<SchemeSpec> parse_schemes(const Json& doc);

}  // namespace remanlca::io
