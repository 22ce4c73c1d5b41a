#include <doctest.h>

#include <cmath>

#include "remanlca/buyback.hpp"
#include "remanlca/errors.hpp"

using namespace remanlca;

namespace {

constexpr double kEv = 1.53477;
constexpr double kEr = 0.61221;

SchemeSpec scheme(int turns, double r, std::int64_t uses = 1000) { return {"s", uses, turns, r, kEv, kEr}; }

// Independent oracle: scan C upwards until the expected deliveries cover U.
std::int64_t injection_by_search(std::int64_t uses, int turns, double r) {
  long double per_device = 0.0L;
  long double survive = 1.0L;
  for (int n = 0; n < turns; ++n) {
    per_device += survive;
    survive *= 1.0L - r;
  }
  std::int64_t c = 1;
  while (static_cast<long double>(c) * per_device < static_cast<long double>(uses) - 1e-9L) ++c;
  return c;
}

}  // namespace

TEST_CASE("injection for the published schemes") {
  CHECK(solve_injection(1000, 3, 0.5) == 572);
  CHECK(solve_injection(1000, 4, 0.15) == 314);
  CHECK(solve_injection(1000, 5, 0.0) == 200);
}

TEST_CASE("injection edge cases") {
  for (double r : {0.0, 0.3, 1.0}) CHECK(solve_injection(777, 1, r) == 777);
  CHECK(solve_injection(1000, 10, 1.0) == 1000);
  CHECK(solve_injection(1, 5, 0.0) == 1);
  // Exact division must not round up through floating-point noise.
  CHECK(solve_injection(1000, 4, 0.0) == 250);
  CHECK(solve_injection(1750, 3, 0.5) == 1000);
}

TEST_CASE("injection agrees with a brute-force search") {
  for (std::int64_t u : {1, 7, 100, 1000, 12345})
    for (int n : {1, 2, 3, 5, 8})
      for (double r : {0.0, 0.05, 0.15, 0.5, 0.9}) {
        CAPTURE(u);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(solve_injection(u, n, r) == injection_by_search(u, n, r));
      }
}

TEST_CASE("delivered uses overshoot by less than one device") {
  for (int n : {1, 2, 3, 4, 5})
    for (double r : {0.0, 0.15, 0.5, 0.7}) {
      const double life = lifetime_uses(n, r);
      const auto c = solve_injection(1000, n, r);
      CHECK(c * life >= 1000.0 - 1e-9);
      CHECK(c * life < 1000.0 + life);
      CHECK(c <= 1000);
    }
}

TEST_CASE("injection is monotone in turns and rejection") {
  for (double r : {0.0, 0.1, 0.5, 0.9})
    for (int n = 1; n < 12; ++n) CHECK(solve_injection(5000, n + 1, r) <= solve_injection(5000, n, r));
  for (int n : {1, 2, 3, 6})
    for (int i = 0; i < 100; ++i) CHECK(solve_injection(5000, n, i / 100.0) <= solve_injection(5000, n, (i + 1) / 100.0));
}

TEST_CASE("scheme emissions for the published schemes") {
  auto bad = scheme_emissions(scheme(3, 0.5));
  auto avg = scheme_emissions(scheme(4, 0.15));
  auto good = scheme_emissions(scheme(5, 0.0));
  CHECK(std::abs(bad.total - 1139.9) <= 0.05);
  CHECK(std::abs(avg.total - 901.9) <= 0.05);
  CHECK(std::abs(good.total - 796.7) <= 0.05);
  CHECK(std::abs(good.per_turn - 0.797) <= 0.001);
  CHECK(bad.total == doctest::Approx(572 * kEv + 428 * kEr));
  CHECK(std::abs(scheme_saving(scheme(5, 0.0)) - 0.481) <= 0.001);
  CHECK(std::abs(scheme_saving(scheme(3, 0.5)) - 0.257) <= 0.001);
}

TEST_CASE("cohort table") {
  auto res = scheme_emissions(scheme(3, 0.5));
  REQUIRE(res.cohort_uses.size() == 3);
  CHECK(res.cohort_uses[0] == 572.0);
  CHECK(res.cohort_uses[1] == 286.0);
  CHECK(res.cohort_uses[2] == 143.0);
  double sum = 0.0;
  for (double c : res.cohort_uses) sum += c;
  CHECK(sum >= 1000.0);
}

TEST_CASE("all-virgin scheme saves nothing") {
  auto s = scheme(1, 0.2);
  CHECK(scheme_emissions(s).injection == 1000);
  CHECK(scheme_saving(s) == doctest::Approx(0.0));
  CHECK(scheme_emissions(s).total == doctest::Approx(1000 * kEv));
}

TEST_CASE("scheme total never exceeds all-virgin use") {
  for (int n : {1, 2, 3, 5})
    for (double r : {0.0, 0.25, 0.75, 1.0}) {
      auto res = scheme_emissions(scheme(n, r));
      CHECK(res.total <= 1000 * kEv + 1e-9);
      CHECK(res.per_turn == doctest::Approx(res.total / 1000));
    }
}

TEST_CASE("scheme input checks") {
  CHECK_THROWS_AS(scheme_emissions(scheme(0, 0.1)), ComputationError);
  CHECK_THROWS_AS(scheme_emissions(scheme(2, 1.5)), ComputationError);
  CHECK_THROWS_AS(scheme_emissions(scheme(2, 0.1, 0)), ComputationError);
  SchemeSpec zero{"z", 10, 2, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(scheme_saving(zero), ComputationError);
}

TEST_CASE("fleet simulation without rejection is exact") {
  auto sim = simulate_fleet(scheme(5, 0.0), 42, 50, 200);
  CHECK(sim.uses.mean == 1000.0);
  CHECK(sim.uses.stddev == 0.0);
  CHECK(sim.uses.ci_low == sim.uses.ci_high);
  CHECK(sim.emissions.mean == doctest::Approx(200 * kEv + 800 * kEr));
}

TEST_CASE("fleet simulation covers the analytic mean") {
  auto sim = simulate_fleet(scheme(3, 0.5), 2024, 1000);
  CHECK(sim.injection == 572);
  const double analytic = 572 * 1.75;
  CHECK(sim.uses.ci_low <= analytic);
  CHECK(sim.uses.ci_high >= analytic);
}

TEST_CASE("fleet simulation converges at scale") {
  SchemeSpec s{"big", 17500, 3, 0.5, kEv, kEr};
  auto sim = simulate_fleet(s, 99, 100, 10000);
  CHECK(std::abs(sim.uses.mean / 17500.0 - 1.0) <= 0.01);
}

TEST_CASE("fleet simulation is deterministic across thread counts") {
  auto a = simulate_fleet(scheme(4, 0.15), 5, 64, 0, 1);
  auto b = simulate_fleet(scheme(4, 0.15), 5, 64, 0, 4);
  auto c = simulate_fleet(scheme(4, 0.15), 6, 64, 0, 1);
  CHECK(a.uses_per_replication == b.uses_per_replication);
  CHECK(a.emissions_per_replication == b.emissions_per_replication);
  CHECK(a.uses.mean == b.uses.mean);
  CHECK(a.uses_per_replication != c.uses_per_replication);
  CHECK_THROWS_AS(simulate_fleet(scheme(4, 0.15), 5, 0), ComputationError);
}
