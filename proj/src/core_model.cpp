#include "remanlca/core_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "remanlca/errors.hpp"
#include "remanlca/factor_store.hpp"

namespace remanlca {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::string_view to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::AttributableIncluded: return "attributable-included";
    case BoundaryClass::NonAttributableIncluded: return "non-attributable-included";
    case BoundaryClass::Excluded: return "excluded";
  }
  return "?";
}

BoundaryRubric::BoundaryRubric(std::map<std::string, BoundaryClass, std::less<>> entries)
    : entries_(std::move(entries)) {}

const BoundaryRubric& BoundaryRubric::nhs_default() {
  using enum BoundaryClass;
  static const BoundaryRubric rubric({
      // attributable processes
      {"raw-materials", AttributableIncluded},
      {"manufacture", AttributableIncluded},
      {"use-phase-consumption", AttributableIncluded},
      {"refurbishment", AttributableIncluded},
      {"waste-management", AttributableIncluded},
      // non-attributable processes
      {"reusable-sterilisation-utilities", NonAttributableIncluded},
      {"operational-consumables", NonAttributableIncluded},
      {"cleaning-chemicals", NonAttributableIncluded},
      {"refrigerant-leakage", NonAttributableIncluded},
      // excluded
      {"staff-transport", Excluded},
      {"patient-transport", Excluded},
      {"infrastructure", Excluded},
      {"software", Excluded},
      {"ancillary-products", Excluded},
  });
  return rubric;
}

bool BoundaryRubric::contains(std::string_view category) const {
  return entries_.find(category) != entries_.end();
}

BoundaryClass BoundaryRubric::classify(std::string_view category) const {
  if (category.empty()) throw ValidationError("empty boundary category");
  auto it = entries_.find(category);
  if (it == entries_.end()) throw ValidationError("unknown boundary category '" + std::string(category) + "'");
  return it->second;
}

BoundaryClass classify_flow(const MaterialFlow& flow, const BoundaryRubric& rubric) {
  try {
    return rubric.classify(flow.category);
  } catch (const ValidationError& e) {
    throw ValidationError("flow '" + flow.name + "' in stage '" + flow.stage + "': " + e.what());
  }
}

std::string_view to_string(QualityRating r) {
  switch (r) {
    case QualityRating::VeryGood: return "very-good";
    case QualityRating::Good: return "good";
    case QualityRating::Fair: return "fair";
    case QualityRating::Poor: return "poor";
  }
  return "?";
}

QualityRating parse_quality_rating(std::string_view s) {
  if (iequals(s, "very-good") || iequals(s, "very good")) return QualityRating::VeryGood;
  if (iequals(s, "good")) return QualityRating::Good;
  if (iequals(s, "fair")) return QualityRating::Fair;
  if (iequals(s, "poor")) return QualityRating::Poor;
  throw InputError("unknown quality rating '" + std::string(s) + "'");
}

QualityScore score_quality(const QualityDimensions& dims) {
  auto all = dims.as_array();
  // Ratings are ordered best-to-worst, so the worst is the maximum enumerator.
  return {dims, *std::max_element(all.begin(), all.end())};
}

std::string_view to_string(Direction d) { return d == Direction::Input ? "input" : "output"; }

std::string_view to_string(SystemKind k) { return k == SystemKind::Virgin ? "virgin" : "remanufactured"; }

const std::vector<std::string>& known_regions() {
  static const std::vector<std::string> regions{"GLO", "RER", "US-WECC", "GB", "CH", "RoW", "CA-QC", "Europe", "DE"};
  return regions;
}

bool is_known_region(std::string_view region) {
  const auto& r = known_regions();
  return std::find(r.begin(), r.end(), region) != r.end();
}

const LifeStage* ProductSystem::find_stage(std::string_view stage) const {
  for (const auto& s : stages)
    if (s.name == stage) return &s;
  return nullptr;
}

LifeStage* ProductSystem::find_stage(std::string_view stage) {
  for (auto& s : stages)
    if (s.name == stage) return &s;
  return nullptr;
}

std::size_t ProductSystem::flow_count() const {
  std::size_t n = 0;
  for (const auto& s : stages) n += s.flows.size();
  return n;
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "?";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                [](const Finding& f) { return f.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                [](const Finding& f) { return f.severity == Severity::Warning; }));
}

void ValidationReport::add(Severity s, std::string where, std::string message) {
  findings.push_back({s, std::move(where), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

ValidationReport validate_system(const ProductSystem& sys, const FactorStore* store) {
  ValidationReport report;
  const std::string sys_where = "system '" + sys.name + "'";

  if (sys.name.empty()) report.add(Severity::Error, sys_where, "system name is empty");
  if (!(sys.device_mass_kg > 0.0)) report.add(Severity::Error, sys_where, "device_mass_kg must be positive");

  std::set<std::string> stage_names;
  for (const auto& stage : sys.stages) {
    const std::string stage_where = "stage '" + stage.name + "'";
    if (stage.name.empty()) report.add(Severity::Error, stage_where, "stage name is empty");
    if (!stage_names.insert(stage.name).second) report.add(Severity::Error, stage_where, "duplicate stage name");
    if (stage.flows.empty() && !stage.manual)
      report.add(Severity::Error, stage_where, "stage has no flows and is not marked manual");

    // Cut-off: a used device enters remanufacturing burden-free, and a virgin
    // life has no remanufacturing step.
    if (sys.kind == SystemKind::Virgin && iequals(stage.name, "remanufacturing"))
      report.add(Severity::Error, stage_where, "virgin system contains a remanufacturing stage");
    if (sys.kind == SystemKind::Remanufactured && iequals(stage.name, "production"))
      report.add(Severity::Error, stage_where, "remanufactured system carries an upstream production stage");

    std::set<std::string> flow_names;
    for (const auto& flow : stage.flows) {
      const std::string where = stage_where + " flow '" + flow.name + "'";
      if (flow.name.empty()) report.add(Severity::Error, where, "flow name is empty");
      if (!flow_names.insert(flow.name).second) report.add(Severity::Error, where, "duplicate flow name in stage");
      if (flow.stage != stage.name)
        report.add(Severity::Error, where, "flow records stage '" + flow.stage + "'");
      if (flow.region.empty()) {
        report.add(Severity::Error, where, "missing region");
      } else if (!is_known_region(flow.region)) {
        report.add(Severity::Warning, where, "region '" + flow.region + "' is not in the known-region list");
      }
      if (flow.time_range.first > flow.time_range.last)
        report.add(Severity::Error, where, "time range is reversed");
      if (flow.boundary == BoundaryClass::Excluded && flow.quantity.magnitude() != 0.0)
        report.add(Severity::Error, where, "excluded-class flow carries a nonzero quantity");
      if (score_quality(flow.quality.dims).overall != flow.quality.overall)
        report.add(Severity::Error, where, "quality overall is not the worst dimension");

      if (store != nullptr && flow.boundary != BoundaryClass::Excluded) {
        try {
          auto hit = store->lookup(flow.factor_key(), flow.region, flow.quantity.unit());
          if (hit.used_fallback)
            report.add(Severity::Info, where, "factor '" + flow.factor_key() + "' resolved via GLO fallback");
        } catch (const UnresolvedFactorError& e) {
          // Distinguish a unit mismatch from a plain miss.
          bool other_unit = false;
          for (const auto& f : store->factors())
            if (f.flow_name == flow.factor_key() && (f.region == flow.region || f.region == kGlobalRegion))
              other_unit = true;
          report.add(Severity::Error, where,
                     other_unit ? "unit mismatch: factor '" + flow.factor_key() + "' exists for another unit than " +
                                      std::string(unit_symbol(flow.quantity.unit()))
                                : std::string(e.what()));
        }
      }
    }
  }
  return report;
}

}  // namespace remanlca
