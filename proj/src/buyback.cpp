#include "remanlca/buyback.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "remanlca/errors.hpp"

namespace remanlca {

void check(const SchemeSpec& spec) {
  if (spec.uses < 1) throw ComputationError("scheme '" + spec.name + "': uses must be >= 1");
  if (spec.turns < 1) throw ComputationError("scheme '" + spec.name + "': turns must be >= 1");
  if (!std::isfinite(spec.rejection_rate) || spec.rejection_rate < 0.0 || spec.rejection_rate > 1.0)
    throw ComputationError("scheme '" + spec.name + "': rejection rate must lie in [0, 1]");
  if (!std::isfinite(spec.e_virgin) || !std::isfinite(spec.e_reman) || spec.e_virgin < 0.0 || spec.e_reman < 0.0)
    throw ComputationError("scheme '" + spec.name + "': emissions must be finite and non-negative");
}

double lifetime_uses(int turns, double rejection_rate) {
  const double survive = 1.0 - rejection_rate;
  double sum = 0.0;
  double term = 1.0;
  for (int n = 1; n <= turns; ++n) {
    sum += term;
    term *= survive;
  }
  return sum;
}

std::int64_t solve_injection(std::int64_t uses, int turns, double rejection_rate) {
  check(SchemeSpec{"", uses, turns, rejection_rate, 0.0, 0.0});
  const double per_device = lifetime_uses(turns, rejection_rate);
  const double raw = static_cast<double>(uses) / per_device;
  // Round up, but let a quotient that is integral up to rounding error stay put
  // (1000 / 5 must give 200, not 201).
  auto c = static_cast<std::int64_t>(std::ceil(raw * (1.0 - 1e-12)));
  return std::clamp<std::int64_t>(c, 1, uses);
}

SchemeResult scheme_emissions(const SchemeSpec& spec) {
  check(spec);
  SchemeResult r;
  r.injection = solve_injection(spec.uses, spec.turns, spec.rejection_rate);
  const auto c = static_cast<double>(r.injection);
  const auto u = static_cast<double>(spec.uses);
  r.total = c * spec.e_virgin + (u - c) * spec.e_reman;
  r.per_turn = r.total / u;
  double alive = c;
  for (int n = 1; n <= spec.turns; ++n) {
    r.cohort_uses.push_back(alive);
    alive *= 1.0 - spec.rejection_rate;
  }
  return r;
}

double scheme_saving(const SchemeSpec& spec) {
  if (spec.e_virgin == 0.0) throw ComputationError("scheme saving undefined for zero virgin emission");
  auto r = scheme_emissions(spec);
  return 1.0 - r.total / (static_cast<double>(spec.uses) * spec.e_virgin);
}

namespace {

FleetStats summarise(const std::vector<double>& xs) {
  FleetStats s;
  const auto n = static_cast<double>(xs.size());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (n - 1.0));
  }
  const double half = 1.959963984540054 * s.stddev / std::sqrt(n);
  s.ci_low = s.mean - half;
  s.ci_high = s.mean + half;
  return s;
}

// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::int64_t run_replication(std::int64_t injection, int turns, double survive, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::int64_t uses = 0;
  for (std::int64_t d = 0; d < injection; ++d) {
    ++uses;  // virgin life
    for (int n = 2; n <= turns; ++n) {
      if (!(unit_draw(rng) < survive)) break;
      ++uses;
    }
  }
  return uses;
}

}  // namespace

FleetSimulation simulate_fleet(const SchemeSpec& spec, std::uint64_t seed, int replications, std::int64_t injection,
                               unsigned threads) {
  check(spec);
  if (replications < 1) throw ComputationError("replications must be >= 1");
  FleetSimulation sim;
  sim.injection = injection > 0 ? injection : solve_injection(spec.uses, spec.turns, spec.rejection_rate);
  sim.replications = replications;
  sim.seed = seed;
  sim.uses_per_replication.assign(static_cast<std::size_t>(replications), 0);

  const double survive = 1.0 - spec.rejection_rate;
  auto worker = [&](unsigned t, unsigned stride) {
    for (auto r = static_cast<std::size_t>(t); r < sim.uses_per_replication.size(); r += stride)
      sim.uses_per_replication[r] = run_replication(sim.injection, spec.turns, survive, seed + r);
  };
  threads = std::max(1u, std::min(threads, static_cast<unsigned>(replications)));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
  }

  std::vector<double> uses;
  for (auto u : sim.uses_per_replication) {
    const auto c = static_cast<double>(sim.injection);
    const auto used = static_cast<double>(u);
    uses.push_back(used);
    sim.emissions_per_replication.push_back(c * spec.e_virgin + (used - c) * spec.e_reman);
  }
  sim.uses = summarise(uses);
  sim.emissions = summarise(sim.emissions_per_replication);
  return sim;
}

}  // namespace remanlca
