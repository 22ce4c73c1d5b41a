#include "remanlca/metrics.hpp"

#include <cmath>
#include <string>

#include "remanlca/errors.hpp"

namespace remanlca {

TurnProfile::TurnProfile(double e_virgin, double e_reman, int turns)
    : e_virgin_(e_virgin), e_reman_(e_reman), turns_(turns) {
  if (turns < 1) throw ComputationError("turns must be >= 1, got " + std::to_string(turns));
  if (!std::isfinite(e_virgin) || !std::isfinite(e_reman) || e_virgin < 0.0 || e_reman < 0.0)
    throw ComputationError("turn emissions must be finite and non-negative");
}

double per_life(const TurnProfile& p) { return p.e_virgin() + (p.turns() - 1) * p.e_reman(); }

double per_turn(const TurnProfile& p) { return per_life(p) / p.turns(); }

double life_saving(const TurnProfile& p) {
  if (p.e_virgin() == 0.0) throw ComputationError("life saving undefined for zero virgin emission");
  return 1.0 - per_life(p) / (p.turns() * p.e_virgin());
}

}  // namespace remanlca
