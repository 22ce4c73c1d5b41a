#include "remanlca/units.hpp"

#include <cmath>

#include "remanlca/errors.hpp"

namespace remanlca {

std::string_view unit_symbol(Unit u) {
  switch (u) {
    case Unit::Mass: return "kg";
    case Unit::Energy: return "kWh";
    case Unit::MassDistance: return "kg*km";
    case Unit::Count: return "item";
  }
  return "?";
}

std::optional<Unit> parse_unit(std::string_view s) {
  if (s == "kg") return Unit::Mass;
  if (s == "kWh" || s == "kwh") return Unit::Energy;
  if (s == "kg*km" || s == "kgkm" || s == "kg.km" || s == "kg km") return Unit::MassDistance;
  if (s == "item" || s == "items" || s == "count") return Unit::Count;
  return std::nullopt;
}

Quantity::Quantity(double magnitude, Unit unit) : magnitude_(magnitude), unit_(unit) {
  if (!std::isfinite(magnitude) || magnitude < 0.0) {
    throw ValidationError("quantity magnitude must be finite and non-negative, got " +
                          std::to_string(magnitude));
  }
}

Quantity Quantity::mass_distance(double kg, double km) {
  if (!std::isfinite(kg) || !std::isfinite(km) || kg < 0.0 || km < 0.0) {
    throw ValidationError("mass and distance must be finite and non-negative");
  }
  return {kg * km, Unit::MassDistance};
}

}  // namespace remanlca
