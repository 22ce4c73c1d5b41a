#pragma once

namespace remanlca {

/// Burden-free emissions of a virgin and a remanufactured turn, plus the number
/// of turns a device is cleared for (first turn virgin, the rest remanufactured).
class TurnProfile {
 public:
  /// Throws ComputationError if turns < 1 or an emission is negative / non-finite.
  TurnProfile(double e_virgin, double e_reman, int turns);

  double e_virgin() const { return e_virgin_; }
  double e_reman() const { return e_reman_; }
  int turns() const { return turns_; }

 private:
  double e_virgin_;
  double e_reman_;
  int turns_;
};

/// Emissions across one device's whole life: e_virgin + (N - 1) e_reman.
double per_life(const TurnProfile& p);

/// per_life / N.
double per_turn(const TurnProfile& p);

/// Saving against N virgin devices: 1 - per_life / (N e_virgin).
/// Throws ComputationError when e_virgin is zero.
double life_saving(const TurnProfile& p);

}  // namespace remanlca
