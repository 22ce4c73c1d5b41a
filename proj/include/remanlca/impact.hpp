#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "remanlca/core_model.hpp"
#include "remanlca/factor_store.hpp"

namespace remanlca {

/// Flow-name membership of the impact categories used in the comparison table
/// (plastic, waste, electricity, packaging, transport, detergent, water,
/// sterilisation-gas). Category order is preserved for reporting.
class CategoryMap {
 public:
  CategoryMap() = default;
  /// Throws ValidationError if a flow name appears in two categories.
  explicit CategoryMap(std::vector<std::pair<std::string, std::vector<std::string>>> categories);

  static const CategoryMap& standard();

  /// Empty string when the flow is unmapped.
  std::string_view category_of(std::string_view flow_name) const;
  const std::vector<std::string>& order() const { return order_; }
  const auto& members() const { return members_; }

 private:
  std::vector<std::string> order_;
  std::vector<std::pair<std::string, std::vector<std::string>>> members_;
  std::map<std::string, std::string, std::less<>> by_flow_;
};

struct FlowEmission {
  std::string stage;
  std::string flow;
  std::string category;  // impact category; empty when no map was applied
  double kg_co2eq = 0.0;
  double proportion = 0.0;
};

struct EmissionBreakdown {
  std::string system;
  std::vector<FlowEmission> per_flow;  // inventory order
  std::vector<std::pair<std::string, double>> per_stage;  // stage order
  std::map<std::string, double> per_category;
  double total = 0.0;

  double stage_total(std::string_view stage) const;
  double category_total(std::string_view category) const;
  /// Sum of every row with this flow name (across stages).
  double flow_total(std::string_view flow) const;
};

/// Per-invocation log of non-fatal events (GLO fallbacks, excluded flows).
struct ComputationLog {
  std::vector<std::string> entries;
};

/// quantity x factor; excluded flows contribute 0 and are logged.
double flow_emission(const MaterialFlow& flow, const FactorStore& store, ComputationLog* log = nullptr);

/// Burden-free per-turn emission of one functional unit, broken down by flow,
/// stage and (when a map is given) impact category. Unmapped flows are an error
/// when a map is supplied.
EmissionBreakdown system_emissions(const ProductSystem& sys, const FactorStore& store,
                                   const CategoryMap* categories = nullptr,
                                   ComputationLog* log = nullptr);

/// Re-buckets a breakdown by the given map. Throws ComputationError for unmapped flows.
std::map<std::string, double> category_breakdown(const EmissionBreakdown& bd, const CategoryMap& map);

struct CategoryDelta {
  std::string category;
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;  // b - a
};

struct Comparison {
  std::vector<CategoryDelta> rows;
  double total_a = 0.0;
  double total_b = 0.0;
  double total_delta = 0.0;
  double relative_saving = 0.0;  // 1 - b/a
};

Comparison compare_systems(const EmissionBreakdown& a, const EmissionBreakdown& b,
                           const CategoryMap& map);

}  // namespace remanlca
