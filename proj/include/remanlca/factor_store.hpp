#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "remanlca/core_model.hpp"
#include "remanlca/units.hpp"

namespace remanlca {

inline constexpr std::string_view kGlobalRegion = "GLO";

struct EmissionFactor {
  std::string flow_name;
  std::string region;
  Unit unit = Unit::Mass;
  double value = 0.0;  // kg CO2eq per unit
  std::string source;
  YearRange time_range;
};

struct FactorKey {
  std::string flow_name;
  std::string region;
  Unit unit = Unit::Mass;
  auto operator<=>(const FactorKey&) const = default;
};

std::string describe(const FactorKey& key);

struct LookupResult {
  const EmissionFactor* factor = nullptr;
  bool used_fallback = false;
};

/// Immutable set of emission factors keyed by (flow, region, unit).
class FactorStore {
 public:
  FactorStore() = default;
  /// Throws ValidationError on duplicate keys or negative / non-finite values.
  explicit FactorStore(std::vector<EmissionFactor> factors);

  /// Exact match, else the same flow and unit in GLO. Throws UnresolvedFactorError.
  LookupResult lookup(std::string_view flow_name, std::string_view region, Unit unit) const;
  const EmissionFactor* find_exact(const FactorKey& key) const;

  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const std::vector<EmissionFactor>& factors() const { return factors_; }

 private:
  std::vector<EmissionFactor> factors_;
  std::map<FactorKey, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Global warming potential

struct GwpEntry {
  std::string gas;
  double gwp = 1.0;  // kg CO2eq per kg gas
};

/// Throws ValidationError unless every gwp > 0, gases are unique, and CO2 (if listed) is exactly 1.
class GwpTable {
 public:
  GwpTable() = default;
  explicit GwpTable(std::vector<GwpEntry> entries);

  const std::vector<GwpEntry>& entries() const { return entries_; }
  /// Throws ComputationError for unknown gases.
  double gwp(std::string_view gas) const;

 private:
  std::vector<GwpEntry> entries_;
};

using GasMass = std::pair<std::string, double>;

/// Sum of mass x GWP over the listed gases, in kg CO2eq.
double gwp_aggregate(const std::vector<GasMass>& masses, const GwpTable& table);

}  // namespace remanlca
