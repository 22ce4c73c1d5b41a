#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "remanlca/buyback.hpp"
#include "remanlca/impact.hpp"
#include "remanlca/report.hpp"
#include "support.hpp"

using namespace remanlca;

namespace {

// Random inventories over a synthetic factor table; no published data involved.
struct Synthetic {
  FactorStore store;
  CategoryMap map;
  ProductSystem sys;
};

Synthetic random_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(0.0, 10.0);
  std::uniform_real_distribution<double> amount(0.0, 5.0);
  std::uniform_int_distribution<int> stage_count(1, 5);
  std::uniform_int_distribution<int> flow_count(1, 6);

  std::vector<EmissionFactor> factors;
  std::vector<std::string> names;
  for (int i = 0; i < 12; ++i) {
    names.push_back("flow-" + std::to_string(i));
    factors.push_back({names.back(), "GLO", Unit::Mass, value(rng), "synthetic", {2000, 2020}});
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> cats{{"c0", {}}, {"c1", {}}, {"c2", {}}};
  for (std::size_t i = 0; i < names.size(); ++i) cats[i % 3].second.push_back(names[i]);

  ProductSystem sys = testing::make_system("synthetic", SystemKind::Virgin, {});
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  const int stages = stage_count(rng);
  for (int s = 0; s < stages; ++s) {
    LifeStage st{"stage-" + std::to_string(s), {}, false};
    const int flows = flow_count(rng);
    std::vector<std::string> used;
    for (int f = 0; f < flows; ++f) {
      auto name = names[pick(rng)];
      if (std::find(used.begin(), used.end(), name) != used.end()) continue;
      used.push_back(name);
      st.flows.push_back(testing::make_flow(name, st.name, Quantity::mass(amount(rng))));
    }
    sys.stages.push_back(std::move(st));
  }
  return {FactorStore(std::move(factors)), CategoryMap(std::move(cats)), std::move(sys)};
}

bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("flow, stage and category totals agree") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto syn = random_system(rng);
    auto bd = system_emissions(syn.sys, syn.store, &syn.map);
    double by_stage = 0.0, by_cat = 0.0;
    for (const auto& [name, v] : bd.per_stage) by_stage += v;
    for (const auto& [name, v] : bd.per_category) by_cat += v;
    CHECK(close_rel(testing::sum_rows(bd), bd.total, 1e-9));
    CHECK(close_rel(by_stage, bd.total, 1e-9));
    CHECK(close_rel(by_cat, bd.total, 1e-9));
  }
}

TEST_CASE("totals scale linearly with quantities") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> k(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto syn = random_system(rng);
    const double factor = k(rng);
    auto scaled = syn.sys;
    for (auto& st : scaled.stages)
      for (auto& f : st.flows) f.quantity = f.quantity.scaled(factor);
    CHECK(close_rel(system_emissions(scaled, syn.store).total, factor * system_emissions(syn.sys, syn.store).total,
                    1e-12));
  }
}

TEST_CASE("splitting a flow leaves the total unchanged") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto syn = random_system(rng);
    auto split = syn.sys;
    auto& st = split.stages.front();
    MaterialFlow part = st.flows.front();
    const double share = frac(rng);
    const double m = part.quantity.magnitude();
    st.flows.front().quantity = Quantity(m * share, Unit::Mass);
    part.quantity = Quantity(m - m * share, Unit::Mass);
    part.name += " (part)";
    part.factor = st.flows.front().name;
    st.flows.push_back(part);
    CHECK(close_rel(system_emissions(split, syn.store).total, system_emissions(syn.sys, syn.store).total, 1e-12));
  }
}

TEST_CASE("stage and flow order never changes totals") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto syn = random_system(rng);
    auto shuffled = syn.sys;
    std::shuffle(shuffled.stages.begin(), shuffled.stages.end(), rng);
    for (auto& st : shuffled.stages) std::shuffle(st.flows.begin(), st.flows.end(), rng);
    auto a = system_emissions(syn.sys, syn.store, &syn.map);
    auto b = system_emissions(shuffled, syn.store, &syn.map);
    CHECK(close_rel(a.total, b.total, 1e-12));
    for (const auto& [cat, v] : a.per_category) CHECK(close_rel(v, b.category_total(cat), 1e-12));
  }
}

TEST_CASE("injection is monotone over random parameters") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> uses(1, 100000);
  std::uniform_int_distribution<int> turns(1, 20);
  std::uniform_real_distribution<double> rate(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = uses(rng);
    const int n = turns(rng);
    const double r1 = rate(rng), r2 = rate(rng);
    CHECK(solve_injection(u, n + 1, r1) <= solve_injection(u, n, r1));
    CHECK(solve_injection(u, n, std::min(r1, r2)) <= solve_injection(u, n, std::max(r1, r2)));
    const auto c = solve_injection(u, n, r1);
    CHECK(c >= 1);
    CHECK(c <= u);
  }
}

TEST_CASE("CSV round-trip of random breakdowns") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto syn = random_system(rng);
    auto bd = system_emissions(syn.sys, syn.store, &syn.map);
    auto rows = report::parse_csv(report::render(report::breakdown_document(bd), report::Format::Csv));
    REQUIRE(rows.size() == bd.per_flow.size() + 2);
    for (std::size_t i = 0; i < bd.per_flow.size(); ++i) {
      CHECK(rows[i + 1][1] == bd.per_flow[i].flow);
      CHECK(std::abs(std::stod(rows[i + 1][3]) - bd.per_flow[i].kg_co2eq) <= 1e-5);
    }
    CHECK(std::abs(std::stod(rows.back()[3]) - bd.total) <= 1e-5);
  }
}
