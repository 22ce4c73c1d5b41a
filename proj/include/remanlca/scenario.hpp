#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "remanlca/core_model.hpp"
#include "remanlca/factor_store.hpp"
#include "remanlca/impact.hpp"

namespace remanlca {

enum class RejectionMode {
  /// Incinerated mass per remanufactured unit = R x device mass.
  Amortized,
  /// Incinerated mass per successful unit = R / (1 - R) x device mass, CH incineration.
  PerSuccess,
};

std::string_view to_string(RejectionMode m);
RejectionMode parse_rejection_mode(std::string_view s);

inline constexpr std::string_view kTransportStage = "Transport";
inline constexpr std::string_view kIncinerationStage = "Incineration";
inline constexpr std::string_view kIncinerationFlow = "plastic incineration";
inline constexpr std::string_view kElectricityFlow = "electricity";
inline constexpr std::string_view kPerSuccessIncinerationRegion = "CH";

enum class LegDirection { Inbound, Outbound };

struct TransportLeg {
  std::string mode;  // flow and factor name, e.g. "lorry"
  double distance_km = 0.0;
  std::string region;
  LegDirection direction = LegDirection::Outbound;
};

struct ElectricityOverride {
  std::string region;
  std::string factor = std::string(kElectricityFlow);
  /// Stages whose electricity flows run at the remanufacturing facility.
  std::vector<std::string> stages;
};

/// Remanufacturing-location calibration fixture.
struct LocationProfile {
  std::string code;
  std::vector<TransportLeg> legs;
  std::optional<ElectricityOverride> electricity;
  std::optional<std::string> incineration_region;
  /// Free-text calibration constraints, one per entry.
  std::vector<std::string> constraints;
};

/// Replaces the transport stage with the profile's legs (one flow per mode and
/// region, inbound and outbound summed) and re-points facility electricity.
/// Throws ValidationError if a remanufactured profile lacks an inbound or
/// outbound leg, UnresolvedFactorError if the store cannot price a new flow.
ProductSystem apply_location(const ProductSystem& sys, const LocationProfile& profile,
                             const FactorStore& store);

/// Sets the incineration mass for rejection rate R. R must lie in [0, 1] for the
/// amortized mode and [0, 1) for per-success; otherwise ComputationError.
ProductSystem apply_rejection(const ProductSystem& sys, double rejection_rate, RejectionMode mode);

enum class Location { DE, UK, USA };
std::string_view to_string(Location l);
Location parse_location(std::string_view s);

struct ScenarioParams {
  std::string name;
  Location location = Location::USA;
  double rejection_rate = 0.15;
  int turns = 1;
  RejectionMode rejection_mode = RejectionMode::Amortized;
};

/// Throws ComputationError for R outside [0, 1] or turns < 1.
void check(const ScenarioParams& p);

/// Everything a scenario evaluation needs, shared read-only.
struct ScenarioContext {
  const ProductSystem* virgin = nullptr;
  const ProductSystem* reman = nullptr;
  const FactorStore* store = nullptr;
  const std::vector<LocationProfile>* locations = nullptr;
  /// Optional; when set, breakdowns carry impact categories.
  const CategoryMap* categories = nullptr;

  const LocationProfile& profile(Location l) const;
};

struct ScenarioResult {
  std::string name;
  ScenarioParams params;
  double e_virgin = 0.0;
  double e_reman = 0.0;  // burden-free per-turn, after location and rejection
  double per_life = 0.0;
  double per_turn = 0.0;
  double life_saving = 0.0;
  EmissionBreakdown breakdown;  // of the transformed remanufactured system
};

/// Location, then rejection, then turn metrics.
ScenarioResult evaluate_scenario(const ScenarioParams& p, const ScenarioContext& ctx);

/// Throws ValidationError on duplicate scenario names.
std::vector<ScenarioResult> run_scenarios(const std::vector<ScenarioParams>& scenarios,
                                          const ScenarioContext& ctx);

enum class SweepParam { Location, RejectionRate, Turns };
std::string_view to_string(SweepParam p);
SweepParam parse_sweep_param(std::string_view s);

/// Mode a sweep uses unless told otherwise: per-success for R, amortized else.
RejectionMode default_sweep_mode(SweepParam p);

struct SweepPoint {
  std::string label;  // value as rendered in the series
  double value = 0.0;  // numeric value (location index for L)
  double total = 0.0;  // E^f_r at this point
  double per_life = 0.0;
  double per_turn = 0.0;
};

/// Each grid entry replaces the swept field of `base` and is evaluated
/// independently. Locations are given as codes; R and N as numbers.
/// Throws ComputationError for an empty grid or out-of-range values.
std::vector<SweepPoint> sweep_univariate(SweepParam param, const std::vector<std::string>& grid,
                                         const ScenarioParams& base, const ScenarioContext& ctx);

}  // namespace remanlca
