#include <doctest.h>

#include <cmath>
#include <string>

#include "remanlca/errors.hpp"
#include "remanlca/io.hpp"
#include "remanlca/report.hpp"
#include "support.hpp"

using namespace remanlca;
using io::Json;

namespace {

Json minimal_system() {
  return Json::parse(R"({
    "name": "mini", "kind": "virgin", "device_mass_kg": 0.1,
    "stages": [{"name": "Production", "flows": [
      {"name": "polyamide", "direction": "input", "magnitude": 0.5, "unit": "kg", "region": "GLO",
       "category": "raw-materials", "quality": "good", "time_range": [2010, 2020]},
      {"name": "lorry", "direction": "input", "mass_kg": 0.1, "distance_km": 250, "unit": "kg*km",
       "region": "RER", "category": "raw-materials",
       "quality": {"technology": "good", "age": "fair", "geography": "good", "completeness": "very-good",
                   "reliability": "good"},
       "time_range": [2010, 2020]}]}]})");
}

}  // namespace

TEST_CASE("system documents parse") {
  auto sys = io::parse_system(minimal_system());
  CHECK(sys.name == "mini");
  REQUIRE(sys.flow_count() == 2);
  const auto& lorry = sys.stages[0].flows[1];
  CHECK(lorry.quantity.unit() == Unit::MassDistance);
  CHECK(lorry.quantity.magnitude() == doctest::Approx(25.0));
  CHECK(lorry.quality.overall == QualityRating::Fair);
  CHECK(sys.stages[0].flows[0].stage == "Production");
}

TEST_CASE("system JSON round-trips") {
  const auto& fx = testing::fixtures();
  for (const auto* sys : {&fx.virgin, &fx.reman}) {
    auto again = io::parse_system(io::to_json(*sys));
    CHECK(again.flow_count() == sys->flow_count());
    CHECK(system_emissions(again, fx.store).total == system_emissions(*sys, fx.store).total);
    CHECK(io::to_json(again) == io::to_json(*sys));
  }
}

TEST_CASE("structural problems are input errors") {
  auto doc = minimal_system();
  SUBCASE("missing field") { doc.erase("stages"); }
  SUBCASE("wrong type") { doc["device_mass_kg"] = "heavy"; }
  SUBCASE("bad kind") { doc["kind"] = "recycled"; }
  SUBCASE("missing quality") { doc["stages"][0]["flows"][0].erase("quality"); }
  SUBCASE("bad direction") { doc["stages"][0]["flows"][0]["direction"] = "sideways"; }
  SUBCASE("bad year range shape") { doc["stages"][0]["flows"][0]["time_range"] = Json::array({2010}); }
  CHECK_THROWS_AS(io::parse_system(doc), InputError);
}

TEST_CASE("invariant breaches are validation errors") {
  auto doc = minimal_system();
  SUBCASE("negative magnitude") { doc["stages"][0]["flows"][0]["magnitude"] = -0.5; }
  SUBCASE("unknown unit") { doc["stages"][0]["flows"][0]["unit"] = "furlong"; }
  SUBCASE("unknown category") { doc["stages"][0]["flows"][0]["category"] = "teleportation"; }
  CHECK_THROWS_AS(io::parse_system(doc), ValidationError);
  auto lenient = io::parse_system_lenient(doc);
  CHECK_FALSE(lenient.report.valid());
}

TEST_CASE("unreadable files") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), InputError);
  CHECK_THROWS_AS(io::load_system("/nonexistent/file.json"), InputError);
}

TEST_CASE("fingerprints are stable and content-sensitive") {
  CHECK(io::fingerprint("") == "cbf29ce484222325");
  CHECK(io::fingerprint("a") == "af63dc4c8601ec8c");
  CHECK(io::fingerprint("abc") != io::fingerprint("abd"));
}

TEST_CASE("scenario documents") {
  auto s = io::parse_scenarios(io::read_json_file(testing::data_path("scenarios.json")));
  REQUIRE(s.size() == 3);
  CHECK(s[0].name == "Good");
  CHECK(s[2].rejection_mode == RejectionMode::PerSuccess);

  CHECK(io::parse_scenarios(Json::parse(R"({"scenarios":[]})")).empty());
  auto dup = Json::parse(R"({"scenarios":[{"name":"a","location":"DE","rejection_rate":0.1,"turns":2},
                                          {"name":"a","location":"UK","rejection_rate":0.1,"turns":2}]})");
  CHECK_THROWS_AS(io::parse_scenarios(dup), ValidationError);
  auto frac = Json::parse(R"({"scenarios":[{"name":"a","location":"DE","rejection_rate":0.1,"turns":2.5}]})");
  CHECK_THROWS_AS(io::parse_scenarios(frac), InputError);
  auto range = Json::parse(R"({"scenarios":[{"name":"a","location":"DE","rejection_rate":1.5,"turns":2}]})");
  CHECK_THROWS_AS(io::parse_scenarios(range), ValidationError);
}

TEST_CASE("scheme documents") {
  auto single = io::parse_schemes(Json::parse(R"({"uses":1000,"turns":3,"rejection_rate":0.5,
                                                 "e_virgin":1.53477,"e_reman":0.61221})"));
  REQUIRE(single.size() == 1);
  CHECK(single[0].uses == 1000);
  auto fixture = io::parse_schemes(io::read_json_file(testing::data_path("schemes.json")));
  CHECK(fixture.size() == 3);
  CHECK_THROWS_AS(io::parse_schemes(Json::parse(R"({"uses":0,"turns":3,"rejection_rate":0.5,
                                                   "e_virgin":1,"e_reman":0.5})")),
                  ValidationError);
}

TEST_CASE("location and category documents") {
  auto locs = io::parse_locations(io::read_json_file(testing::data_path("locations.json")));
  CHECK(locs.size() == 3);
  for (const auto& l : locs) CHECK_FALSE(l.constraints.empty());
  auto cats = io::parse_categories(io::read_json_file(testing::data_path("categories.json")));
  CHECK(cats.order() == CategoryMap::standard().order());
  auto rubric = io::parse_rubric(io::read_json_file(testing::data_path("rubric.json")));
  CHECK(rubric.entries() == BoundaryRubric::nhs_default().entries());
}

TEST_CASE("number formatting") {
  CHECK(report::fmt5(1.5347675) == "1.53477");
  CHECK(report::fmt5(-0.000001) == "0.00000");
  CHECK(report::fmt5(-0.5) == "-0.50000");
  CHECK(report::fmt5(0.0) == "0.00000");
}

TEST_CASE("breakdown CSV layout") {
  const auto& fx = testing::fixtures();
  auto bd = system_emissions(fx.virgin, fx.store, &CategoryMap::standard());
  auto text = report::render(report::breakdown_document(bd), report::Format::Csv);
  CHECK(text.rfind("# remanlca breakdown-table\n", 0) == 0);
  auto rows = report::parse_csv(text);
  REQUIRE(rows.size() == bd.per_flow.size() + 2);
  CHECK(rows[0] == std::vector<std::string>{"stage", "flow", "category", "kg_co2eq", "proportion"});
  CHECK(rows.back()[0] == "total");
  CHECK(rows.back()[3] == "1.53477");
}

TEST_CASE("CSV quoting survives commas and quotes") {
  report::ReportDocument doc;
  doc.header = {"a", "b"};
  doc.rows = {{"water, ultrapure", "say \"hi\""}, {"plain", ""}};
  auto rows = report::parse_csv(report::render(doc, report::Format::Csv));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "water, ultrapure");
  CHECK(rows[1][1] == "say \"hi\"");
  CHECK(rows[2][1].empty());
}

TEST_CASE("CSV round-trip within rendering precision") {
  const auto& fx = testing::fixtures();
  auto bd = system_emissions(fx.reman, fx.store, &CategoryMap::standard());
  auto rows = report::parse_csv(report::render(report::breakdown_document(bd), report::Format::Csv));
  for (std::size_t i = 0; i < bd.per_flow.size(); ++i) {
    CHECK(std::abs(std::stod(rows[i + 1][3]) - bd.per_flow[i].kg_co2eq) <= 1e-5);
    CHECK(std::abs(std::stod(rows[i + 1][4]) - bd.per_flow[i].proportion) <= 1e-5);
  }
}

TEST_CASE("markdown carries the same numbers") {
  const auto& fx = testing::fixtures();
  auto doc = report::breakdown_document(system_emissions(fx.virgin, fx.store, &CategoryMap::standard()));
  auto md = report::render(doc, report::Format::Markdown);
  CHECK(md.find("| stage | flow | category | kg_co2eq | proportion |") != std::string::npos);
  for (const auto& row : doc.rows) CHECK(md.find(row[3]) != std::string::npos);
  CHECK(md.find("1.53477") != std::string::npos);
  CHECK(report::parse_format("md") == report::Format::Markdown);
  CHECK_THROWS_AS(report::parse_format("xlsx"), InputError);
}

TEST_CASE("quality summary lists every flow") {
  const auto& fx = testing::fixtures();
  auto doc = report::quality_document(fx.reman);
  CHECK(doc.rows.size() == fx.reman.flow_count());
}

TEST_CASE("rendering is deterministic") {
  const auto& fx = testing::fixtures();
  auto make = [&] {
    return report::render(report::breakdown_document(system_emissions(fx.reman, fx.store, &CategoryMap::standard())),
                          report::Format::Csv);
  };
  CHECK(make() == make());
}
