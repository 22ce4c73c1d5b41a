#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace remanlca {

enum class Unit { Mass, Energy, MassDistance, Count };

/// Canonical symbol used in JSON documents: "kg", "kWh", "kg*km", "item".
std::string_view unit_symbol(Unit u);

/// Accepts the canonical symbol plus a few common spellings ("kgkm", "kg.km", "tkm" is not accepted).
std::optional<Unit> parse_unit(std::string_view s);

/// Non-negative magnitude tagged with its unit. Mass-distance amounts hold the
/// resolved product (kg*km).
class Quantity {
 public:
  Quantity(double magnitude, Unit unit);

  static Quantity mass(double kg) { return {kg, Unit::Mass}; }
  static Quantity energy(double kwh) { return {kwh, Unit::Energy}; }
  static Quantity count(double items) { return {items, Unit::Count}; }
  static Quantity mass_distance(double kg, double km);

  double magnitude() const { return magnitude_; }
  Unit unit() const { return unit_; }

  Quantity scaled(double k) const { return {magnitude_ * k, unit_}; }

  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  double magnitude_;
  Unit unit_;
};

}  // namespace remanlca
