#include "remanlca/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

#include "remanlca/errors.hpp"
#include "remanlca/metrics.hpp"

namespace remanlca {

std::string_view to_string(RejectionMode m) { return m == RejectionMode::Amortized ? "amortized" : "per-success"; }

RejectionMode parse_rejection_mode(std::string_view s) {
  if (s == "amortized") return RejectionMode::Amortized;
  if (s == "per-success") return RejectionMode::PerSuccess;
  throw InputError("unknown rejection mode '" + std::string(s) + "' (expected amortized or per-success)");
}

std::string_view to_string(Location l) {
  switch (l) {
    case Location::DE: return "DE";
    case Location::UK: return "UK";
    case Location::USA: return "USA";
  }
  return "?";
}

Location parse_location(std::string_view s) {
  if (s == "DE") return Location::DE;
  if (s == "UK" || s == "GB") return Location::UK;
  if (s == "USA" || s == "US") return Location::USA;
  throw InputError("unknown location '" + std::string(s) + "' (expected DE, UK or USA)");
}

namespace {

void require_priced(const MaterialFlow& flow, const FactorStore& store) {
  try {
    store.lookup(flow.factor_key(), flow.region, flow.quantity.unit());
  } catch (const UnresolvedFactorError& e) {
    throw UnresolvedFactorError("flow '" + flow.name + "' in stage '" + flow.stage + "': " + e.what());
  }
}

}  // namespace

ProductSystem apply_location(const ProductSystem& sys, const LocationProfile& profile, const FactorStore& store) {
  bool inbound = false;
  bool outbound = false;
  for (const auto& leg : profile.legs) {
    if (!std::isfinite(leg.distance_km) || leg.distance_km < 0.0)
      throw ValidationError("location '" + profile.code + "': negative distance on leg '" + leg.mode + "'");
    (leg.direction == LegDirection::Inbound ? inbound : outbound) = true;
  }
  if (sys.kind == SystemKind::Remanufactured && !(inbound && outbound))
    throw ValidationError("location '" + profile.code + "' needs both inbound and outbound legs");

  ProductSystem out = sys;
  LifeStage* transport = out.find_stage(kTransportStage);
  if (transport == nullptr) {
    out.stages.insert(out.stages.begin(), LifeStage{std::string(kTransportStage), {}, false});
    transport = &out.stages.front();
  }

  // Legs of the same mode and region collapse into one flow.
  std::vector<MaterialFlow> flows;
  for (const auto& leg : profile.legs) {
    const double amount = Quantity::mass_distance(sys.device_mass_kg, leg.distance_km).magnitude();
    auto same = std::find_if(flows.begin(), flows.end(),
                             [&](const MaterialFlow& f) { return f.name == leg.mode && f.region == leg.region; });
    if (same != flows.end()) {
      same->quantity = Quantity(same->quantity.magnitude() + amount, Unit::MassDistance);
      continue;
    }
    MaterialFlow flow;
    const MaterialFlow* prior = nullptr;
    for (const auto& f : transport->flows)
      if (f.name == leg.mode) prior = &f;
    if (prior == nullptr && !transport->flows.empty()) prior = &transport->flows.front();
    if (prior != nullptr) {
      flow = *prior;
    } else {
      flow.category = "manufacture";
      flow.boundary = BoundaryClass::AttributableIncluded;
      flow.quality = score_quality(QualityDimensions::uniform(QualityRating::Fair));
    }
    flow.name = leg.mode;
    flow.factor.clear();
    flow.stage = transport->name;
    flow.region = leg.region;
    flow.direction = Direction::Input;
    flow.quantity = Quantity(amount, Unit::MassDistance);
    flows.push_back(std::move(flow));
  }
  transport->flows = std::move(flows);
  for (const auto& f : transport->flows) require_priced(f, store);

  if (profile.electricity) {
    const auto& el = *profile.electricity;
    for (auto& stage : out.stages) {
      if (std::find(el.stages.begin(), el.stages.end(), stage.name) == el.stages.end()) continue;
      for (auto& flow : stage.flows) {
        if (flow.name != kElectricityFlow) continue;
        flow.region = el.region;
        flow.factor = el.factor == flow.name ? std::string{} : el.factor;
        require_priced(flow, store);
      }
    }
  }

  if (profile.incineration_region) {
    if (auto* stage = out.find_stage(kIncinerationStage)) {
      for (auto& flow : stage->flows) {
        flow.region = *profile.incineration_region;
        flow.factor.clear();
        require_priced(flow, store);
      }
    }
  }
  return out;
}

ProductSystem apply_rejection(const ProductSystem& sys, double rejection_rate, RejectionMode mode) {
  if (!std::isfinite(rejection_rate) || rejection_rate < 0.0 || rejection_rate > 1.0)
    throw ComputationError("rejection rate must lie in [0, 1]");
  if (mode == RejectionMode::PerSuccess && rejection_rate >= 1.0)
    throw ComputationError("per-success rejection accounting is undefined at R = 1");
  if (sys.kind != SystemKind::Remanufactured)
    throw ComputationError("rejection rate applies to remanufactured systems only");

  ProductSystem out = sys;
  MaterialFlow* target = nullptr;
  if (auto* stage = out.find_stage(kIncinerationStage))
    for (auto& flow : stage->flows)
      if (flow.name == kIncinerationFlow) target = &flow;
  if (target == nullptr) throw ComputationError("system '" + sys.name + "' has no incineration flow");

  if (mode == RejectionMode::Amortized) {
    target->quantity = Quantity::mass(rejection_rate * sys.device_mass_kg);
  } else {
    target->quantity = Quantity::mass(rejection_rate / (1.0 - rejection_rate) * sys.device_mass_kg);
    target->region = std::string(kPerSuccessIncinerationRegion);
    target->factor.clear();
  }
  return out;
}

void check(const ScenarioParams& p) {
  if (!std::isfinite(p.rejection_rate) || p.rejection_rate < 0.0 || p.rejection_rate > 1.0)
    throw ComputationError("scenario '" + p.name + "': rejection rate must lie in [0, 1]");
  if (p.turns < 1) throw ComputationError("scenario '" + p.name + "': turns must be >= 1");
}

const LocationProfile& ScenarioContext::profile(Location l) const {
  if (locations != nullptr)
    for (const auto& p : *locations)
      if (parse_location(p.code) == l) return p;
  throw ComputationError("no location profile for " + std::string(to_string(l)));
}

ScenarioResult evaluate_scenario(const ScenarioParams& p, const ScenarioContext& ctx) {
  check(p);
  if (!ctx.virgin || !ctx.reman || !ctx.store) throw ComputationError("scenario context is incomplete");
  auto located = apply_location(*ctx.reman, ctx.profile(p.location), *ctx.store);
  auto rejected = apply_rejection(located, p.rejection_rate, p.rejection_mode);

  ScenarioResult r;
  r.name = p.name;
  r.params = p;
  r.breakdown = system_emissions(rejected, *ctx.store, ctx.categories);
  r.e_virgin = system_emissions(*ctx.virgin, *ctx.store).total;
  r.e_reman = r.breakdown.total;
  TurnProfile profile(r.e_virgin, r.e_reman, p.turns);
  r.per_life = per_life(profile);
  r.per_turn = per_turn(profile);
  r.life_saving = life_saving(profile);
  return r;
}

std::vector<ScenarioResult> run_scenarios(const std::vector<ScenarioParams>& scenarios, const ScenarioContext& ctx) {
  std::set<std::string> names;
  for (const auto& s : scenarios)
    if (!names.insert(s.name).second) throw ValidationError("duplicate scenario name '" + s.name + "'");
  std::vector<ScenarioResult> out;
  out.reserve(scenarios.size());
  for (const auto& s : scenarios) out.push_back(evaluate_scenario(s, ctx));
  return out;
}

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::Location: return "L";
    case SweepParam::RejectionRate: return "R";
    case SweepParam::Turns: return "N";
  }
  return "?";
}

SweepParam parse_sweep_param(std::string_view s) {
  if (s == "L" || s == "location") return SweepParam::Location;
  if (s == "R" || s == "rejection" || s == "rejection_rate") return SweepParam::RejectionRate;
  if (s == "N" || s == "turns") return SweepParam::Turns;
  throw InputError("unknown sweep parameter '" + std::string(s) + "' (expected L, R or N)");
}

RejectionMode default_sweep_mode(SweepParam p) {
  return p == SweepParam::RejectionRate ? RejectionMode::PerSuccess : RejectionMode::Amortized;
}

namespace {

double parse_number(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError("grid value '" + std::string(s) + "' is not a number");
  return v;
}

int parse_turns(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError("turn count '" + std::string(s) + "' is not an integer");
  return v;
}

}  // namespace

std::vector<SweepPoint> sweep_univariate(SweepParam param, const std::vector<std::string>& grid,
                                         const ScenarioParams& base, const ScenarioContext& ctx) {
  if (grid.empty()) throw ComputationError("sweep grid is empty");
  std::vector<SweepPoint> series;
  series.reserve(grid.size());
  for (const auto& raw : grid) {
    ScenarioParams p = base;
    SweepPoint point;
    point.label = raw;
    switch (param) {
      case SweepParam::Location:
        p.location = parse_location(raw);
        point.label = std::string(to_string(p.location));
        point.value = static_cast<double>(static_cast<int>(p.location));
        break;
      case SweepParam::RejectionRate:
        p.rejection_rate = parse_number(raw);
        point.value = p.rejection_rate;
        break;
      case SweepParam::Turns:
        p.turns = parse_turns(raw);
        point.value = p.turns;
        break;
    }
    auto r = evaluate_scenario(p, ctx);
    point.total = r.e_reman;
    point.per_life = r.per_life;
    point.per_turn = r.per_turn;
    series.push_back(std::move(point));
  }
  return series;
}

}  // namespace remanlca
