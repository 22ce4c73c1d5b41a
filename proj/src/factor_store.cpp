#include "remanlca/factor_store.hpp"

#include <cmath>
#include <set>

#include "remanlca/errors.hpp"

namespace remanlca {

std::string describe(const FactorKey& key) {
  return "(" + key.flow_name + ", " + key.region + ", " + std::string(unit_symbol(key.unit)) + ")";
}

FactorStore::FactorStore(std::vector<EmissionFactor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    FactorKey key{f.flow_name, f.region, f.unit};
    if (f.flow_name.empty()) throw ValidationError("factor with empty flow name");
    if (f.region.empty()) throw ValidationError("factor " + describe(key) + " has no region");
    if (!std::isfinite(f.value) || f.value < 0.0)
      throw ValidationError("factor " + describe(key) + " has negative or non-finite value");
    if (!index_.emplace(key, i).second) throw ValidationError("duplicate factor " + describe(key));
  }
}

const EmissionFactor* FactorStore::find_exact(const FactorKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &factors_[it->second];
}

LookupResult FactorStore::lookup(std::string_view flow_name, std::string_view region, Unit unit) const {
  FactorKey key{std::string(flow_name), std::string(region), unit};
  if (const auto* f = find_exact(key)) return {f, false};
  if (region != kGlobalRegion) {
    FactorKey global{key.flow_name, std::string(kGlobalRegion), unit};
    if (const auto* f = find_exact(global)) return {f, true};
  }
  throw UnresolvedFactorError("unresolved emission factor " + describe(key));
}

GwpTable::GwpTable(std::vector<GwpEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (!seen.insert(e.gas).second) throw ValidationError("duplicate GWP entry for " + e.gas);
    if (!std::isfinite(e.gwp) || e.gwp <= 0.0) throw ValidationError("GWP for " + e.gas + " must be positive");
    if (e.gas == "CO2" && e.gwp != 1.0) throw ValidationError("GWP of CO2 must be exactly 1");
  }
}

double GwpTable::gwp(std::string_view gas) const {
  for (const auto& e : entries_)
    if (e.gas == gas) return e.gwp;
  throw ComputationError("gas '" + std::string(gas) + "' missing from GWP table");
}

double gwp_aggregate(const std::vector<GasMass>& masses, const GwpTable& table) {
  double total = 0.0;
  for (const auto& [gas, kg] : masses) total += kg * table.gwp(gas);
  return total;
}

}  // namespace remanlca
