#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace remanlca {

/// Buy-back scheme: U uses delivered by an initial injection of virgin devices
/// that are remanufactured up to N turns, losing a fraction R at each return.
struct SchemeSpec {
  std::string name;
  std::int64_t uses = 1000;
  int turns = 1;
  double rejection_rate = 0.0;
  double e_virgin = 0.0;
  double e_reman = 0.0;
};

/// Throws ComputationError when U < 1, N < 1, R outside [0, 1] or an emission is negative.
void check(const SchemeSpec& spec);

/// Expected uses contributed by one injected device: sum_{n=1..N} (1 - R)^(n-1).
double lifetime_uses(int turns, double rejection_rate);

/// Smallest integer injection C with C x lifetime_uses >= U.
std::int64_t solve_injection(std::int64_t uses, int turns, double rejection_rate);

struct SchemeResult {
  std::int64_t injection = 0;
  double total = 0.0;     // C e_v + (U - C) e_r
  double per_turn = 0.0;  // total / U
  /// Expected uses delivered at turn index n = 1..N: C (1 - R)^(n-1).
  std::vector<double> cohort_uses;
};

SchemeResult scheme_emissions(const SchemeSpec& spec);

/// 1 - total / (U e_virgin). Throws ComputationError when e_virgin is zero.
double scheme_saving(const SchemeSpec& spec);

struct FleetStats {
  double mean = 0.0;
  double stddev = 0.0;
  double ci_low = 0.0;   // 95 % normal-approximation interval of the mean
  double ci_high = 0.0;
};

struct FleetSimulation {
  std::int64_t injection = 0;
  int replications = 0;
  std::uint64_t seed = 0;
  FleetStats uses;
  FleetStats emissions;
  std::vector<std::int64_t> uses_per_replication;
  std::vector<double> emissions_per_replication;
};

/// Monte Carlo check of the injection solver. Each of `injection` devices is
/// used once as virgin, then survives every return with probability 1 - R until
/// rejected or retired after N turns. Replication r draws from a generator
/// seeded with seed + r, so results are deterministic and independent of how
/// replications are scheduled. `injection` <= 0 means use solve_injection.
FleetSimulation simulate_fleet(const SchemeSpec& spec, std::uint64_t seed, int replications,
                               std::int64_t injection = 0, unsigned threads = 1);

}  // namespace remanlca
