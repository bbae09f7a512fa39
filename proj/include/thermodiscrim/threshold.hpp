#pragma once

#include <vector>

#include "thermodiscrim/discrimination.hpp"
#include "thermodiscrim/thermal.hpp"

namespace thermodiscrim {

// Equally likely thermal states of one Hamiltonian; decide whether the
// source temperature lies below or above t_c.
struct ThresholdProblem {
  SpectralHamiltonian hamiltonian;
  std::vector<Temperature> temperatures;  // strictly increasing
  Temperature t_c;

  // Throws ValidationError unless N >= 2, temperatures are strictly
  // increasing, t_c differs from every listed temperature, and both sides of
  // t_c are occupied.
  void validate() const;
};

enum class Side { Below = 0, Above = 1 };
const char* to_string(Side s);

// Uniform mixtures of the states on each side, as weights over energy levels.
struct ThresholdReduction {
  std::vector<double> weights_minus;
  std::vector<double> weights_plus;
  double q_minus;
  double q_plus;
  int n_minus;
  int n_plus;
};

ThresholdReduction reduce(const ThresholdProblem& p);

struct ThresholdDecision {
  ThresholdReduction reduction;
  // Hypothesis 0 is "below", hypothesis 1 is "above".
  DiscriminationResult result;
  std::vector<Side> sides;  // per energy level

  // Every energy level concludes the same side, so no measurement is needed.
  bool trivial() const;
};

ThresholdDecision decide(const ThresholdProblem& p);

// The binary commuting problem decide() solves, for certificate checks.
DiscriminationProblem reduced_problem(const ThresholdProblem& p);

struct EffectiveTemperatures {
  Temperature t_minus;
  Temperature t_plus;
};

// Qubit only: tanh(alpha/T_pm) is the mean of tanh(alpha/T_j) over the side,
// with alpha half the level gap. These are the temperatures at which the
// mixtures are themselves thermal.
EffectiveTemperatures qubit_effective_temperatures(const ThresholdProblem& p);

}  // namespace thermodiscrim
