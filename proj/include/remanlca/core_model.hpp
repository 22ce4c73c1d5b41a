#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "remanlca/units.hpp"

namespace remanlca {

// ---------------------------------------------------------------------------
// System boundary

enum class BoundaryClass { AttributableIncluded, NonAttributableIncluded, Excluded };

std::string_view to_string(BoundaryClass c);

/// Category name -> boundary class. The default rubric mirrors the NHS medical
/// device inclusion table (attributable, non-attributable, excluded processes).
class BoundaryRubric {
 public:
  BoundaryRubric() = default;
  explicit BoundaryRubric(std::map<std::string, BoundaryClass, std::less<>> entries);

  static const BoundaryRubric& nhs_default();

  /// Throws ValidationError if the category is empty or unknown.
  BoundaryClass classify(std::string_view category) const;
  bool contains(std::string_view category) const;
  const auto& entries() const { return entries_; }

 private:
  std::map<std::string, BoundaryClass, std::less<>> entries_;
};

// ---------------------------------------------------------------------------
// Data quality

enum class QualityRating { VeryGood = 0, Good = 1, Fair = 2, Poor = 3 };

std::string_view to_string(QualityRating r);
QualityRating parse_quality_rating(std::string_view s);

struct QualityDimensions {
  QualityRating technology = QualityRating::Poor;
  QualityRating age = QualityRating::Poor;
  QualityRating geography = QualityRating::Poor;
  QualityRating completeness = QualityRating::Poor;
  QualityRating reliability = QualityRating::Poor;

  static QualityDimensions uniform(QualityRating r) { return {r, r, r, r, r}; }
  std::array<QualityRating, 5> as_array() const {
    return {technology, age, geography, completeness, reliability};
  }
  friend bool operator==(const QualityDimensions&, const QualityDimensions&) = default;
};

struct QualityScore {
  QualityDimensions dims;
  QualityRating overall = QualityRating::Poor;
  friend bool operator==(const QualityScore&, const QualityScore&) = default;
};

/// Overall rating is the worst of the five dimensions.
QualityScore score_quality(const QualityDimensions& dims);

// ---------------------------------------------------------------------------
// Inventory

enum class Direction { Input, Output };
enum class SystemKind { Virgin, Remanufactured };

std::string_view to_string(Direction d);
std::string_view to_string(SystemKind k);

struct YearRange {
  int first = 0;
  int last = 0;
  friend bool operator==(const YearRange&, const YearRange&) = default;
};

/// Regions named in the reference inventories. Others are accepted with a warning.
const std::vector<std::string>& known_regions();
bool is_known_region(std::string_view region);

struct MaterialFlow {
  std::string name;
  std::string stage;
  Quantity quantity{0.0, Unit::Mass};
  Direction direction = Direction::Input;
  std::string region;
  /// Boundary rubric category, e.g. "waste-management".
  std::string category;
  BoundaryClass boundary = BoundaryClass::AttributableIncluded;
  QualityScore quality;
  YearRange time_range;
  /// Emission factor key; empty means "same as name".
  std::string factor;

  const std::string& factor_key() const { return factor.empty() ? name : factor; }
};

struct LifeStage {
  std::string name;
  std::vector<MaterialFlow> flows;
  /// Manual stages may be empty (labour carries no modelled flows).
  bool manual = false;
};

struct ProductSystem {
  std::string name;
  SystemKind kind = SystemKind::Virgin;
  std::vector<LifeStage> stages;
  double device_mass_kg = 0.0;
  std::string functional_unit;

  const LifeStage* find_stage(std::string_view stage) const;
  LifeStage* find_stage(std::string_view stage);
  std::size_t flow_count() const;
};

/// Returns the rubric class for the flow's category; throws ValidationError naming the flow.
BoundaryClass classify_flow(const MaterialFlow& flow, const BoundaryRubric& rubric);

// ---------------------------------------------------------------------------
// Validation

enum class Severity { Info, Warning, Error };
std::string_view to_string(Severity s);

struct Finding {
  Severity severity = Severity::Error;
  std::string where;
  std::string message;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool valid() const { return error_count() == 0; }
  std::size_t error_count() const;
  std::size_t warning_count() const;
  void add(Severity s, std::string where, std::string message);
  void merge(const ValidationReport& other);
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

class FactorStore;

/// Checks structural invariants: unique stage and flow names, no excluded flow
/// with a nonzero quantity, regions present, year ranges ordered, cut-off rules
/// per system kind. When a store is given, every flow's factor must resolve with
/// a matching unit (GLO fallbacks are reported as info).
ValidationReport validate_system(const ProductSystem& sys, const FactorStore* store = nullptr);

}  // namespace remanlca
