#include "remanlca/impact.hpp"

#include <set>

#include "remanlca/errors.hpp"

namespace remanlca {

CategoryMap::CategoryMap(std::vector<std::pair<std::string, std::vector<std::string>>> categories)
    : members_(std::move(categories)) {
  std::set<std::string> names;
  for (const auto& [category, flows] : members_) {
    if (!names.insert(category).second) throw ValidationError("duplicate impact category '" + category + "'");
    order_.push_back(category);
    for (const auto& flow : flows) {
      auto [it, inserted] = by_flow_.emplace(flow, category);
      if (!inserted && it->second != category)
        throw ValidationError("flow '" + flow + "' mapped to both '" + it->second + "' and '" + category + "'");
    }
  }
}

const CategoryMap& CategoryMap::standard() {
  static const CategoryMap map({
      {"plastic", {"polyamide", "ethylene glycol", "polyethylene LD", "polysulfone", "polyurethane"}},
      {"waste", {"plastic incineration"}},
      {"electricity", {"electricity"}},
      {"packaging", {"polyethylene HD", "carton box"}},
      {"transport", {"container ship", "lorry"}},
      {"detergent", {"hydrogen peroxide", "sodium bicarbonate", "sodium cumene sulphonate"}},
      {"water", {"tap water", "water, ultrapure"}},
      {"sterilisation-gas", {"carbon dioxide", "ethylene oxide"}},
  });
  return map;
}

std::string_view CategoryMap::category_of(std::string_view flow_name) const {
  auto it = by_flow_.find(flow_name);
  return it == by_flow_.end() ? std::string_view{} : std::string_view{it->second};
}

double EmissionBreakdown::stage_total(std::string_view stage) const {
  for (const auto& [name, value] : per_stage)
    if (name == stage) return value;
  return 0.0;
}

double EmissionBreakdown::category_total(std::string_view category) const {
  auto it = per_category.find(std::string(category));
  return it == per_category.end() ? 0.0 : it->second;
}

double EmissionBreakdown::flow_total(std::string_view flow) const {
  double sum = 0.0;
  for (const auto& f : per_flow)
    if (f.flow == flow) sum += f.kg_co2eq;
  return sum;
}

double flow_emission(const MaterialFlow& flow, const FactorStore& store, ComputationLog* log) {
  if (flow.boundary == BoundaryClass::Excluded) {
    if (log) log->entries.push_back("excluded flow '" + flow.name + "' in stage '" + flow.stage + "' contributes 0");
    return 0.0;
  }
  LookupResult hit;
  try {
    hit = store.lookup(flow.factor_key(), flow.region, flow.quantity.unit());
  } catch (const UnresolvedFactorError& e) {
    throw UnresolvedFactorError("flow '" + flow.name + "' in stage '" + flow.stage + "': " + e.what());
  }
  if (hit.factor->unit != flow.quantity.unit())
    throw UnitMismatchError("flow '" + flow.name + "': quantity unit differs from factor unit");
  if (hit.used_fallback && log)
    log->entries.push_back("flow '" + flow.name + "' in stage '" + flow.stage + "': region '" + flow.region +
                           "' fell back to GLO for factor '" + flow.factor_key() + "'");
  return flow.quantity.magnitude() * hit.factor->value;
}

EmissionBreakdown system_emissions(const ProductSystem& sys, const FactorStore& store,
                                   const CategoryMap* categories, ComputationLog* log) {
  EmissionBreakdown bd;
  bd.system = sys.name;
  if (categories)
    for (const auto& name : categories->order()) bd.per_category[name] = 0.0;
  for (const auto& stage : sys.stages) {
    double stage_sum = 0.0;
    for (const auto& flow : stage.flows) {
      FlowEmission row{stage.name, flow.name, {}, flow_emission(flow, store, log), 0.0};
      if (categories) {
        auto cat = categories->category_of(flow.name);
        if (cat.empty()) throw ComputationError("flow '" + flow.name + "' has no impact category");
        row.category = std::string(cat);
        bd.per_category[row.category] += row.kg_co2eq;
      }
      stage_sum += row.kg_co2eq;
      bd.total += row.kg_co2eq;
      bd.per_flow.push_back(std::move(row));
    }
    bd.per_stage.emplace_back(stage.name, stage_sum);
  }
  if (bd.total > 0.0)
    for (auto& row : bd.per_flow) row.proportion = row.kg_co2eq / bd.total;
  return bd;
}

std::map<std::string, double> category_breakdown(const EmissionBreakdown& bd, const CategoryMap& map) {
  std::map<std::string, double> out;
  for (const auto& name : map.order()) out[name] = 0.0;
  for (const auto& row : bd.per_flow) {
    auto cat = map.category_of(row.flow);
    if (cat.empty()) throw ComputationError("flow '" + row.flow + "' has no impact category");
    out[std::string(cat)] += row.kg_co2eq;
  }
  return out;
}

Comparison compare_systems(const EmissionBreakdown& a, const EmissionBreakdown& b, const CategoryMap& map) {
  auto ca = category_breakdown(a, map);
  auto cb = category_breakdown(b, map);
  Comparison cmp;
  for (const auto& name : map.order()) cmp.rows.push_back({name, ca[name], cb[name], cb[name] - ca[name]});
  cmp.total_a = a.total;
  cmp.total_b = b.total;
  cmp.total_delta = b.total - a.total;
  cmp.relative_saving = a.total > 0.0 ? 1.0 - b.total / a.total : 0.0;
  return cmp;
}

}  // namespace remanlca
