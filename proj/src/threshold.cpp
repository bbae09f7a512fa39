#include "thermodiscrim/threshold.hpp"

#include <cmath>
#include <sstream>

namespace thermodiscrim {

void ThresholdProblem::validate() const {
  if (temperatures.size() < 2) throw ValidationError("threshold problem needs at least two temperatures");
  for (size_t j = 1; j < temperatures.size(); ++j)
    if (!(temperatures[j - 1] < temperatures[j]))
      throw ValidationError("temperatures must be strictly increasing");
  int below = 0;
  for (const auto& t : temperatures) {
    if (t == t_c) {
      std::ostringstream os;
      os << "threshold " << t_c.value() << " coincides with a listed temperature";
      throw ValidationError(os.str());
    }
    if (t < t_c) ++below;
  }
  const int above = static_cast<int>(temperatures.size()) - below;
  if (below == 0 || above == 0) {
    std::ostringstream os;
    os << "threshold " << t_c.value() << " leaves the " << (below == 0 ? "below" : "above") << " side empty";
    throw ValidationError(os.str());
  }
}

const char* to_string(Side s) { return s == Side::Below ? "below" : "above"; }

ThresholdReduction reduce(const ThresholdProblem& p) {
  p.validate();
  const auto levels = static_cast<size_t>(p.hamiltonian.num_levels());
  ThresholdReduction r{std::vector<double>(levels, 0.0), std::vector<double>(levels, 0.0), 0.0, 0.0, 0, 0};
  for (const auto& t : p.temperatures) {
    const ThermalState s = thermal_state(p.hamiltonian, t);
    const bool below = t < p.t_c;
    auto& acc = below ? r.weights_minus : r.weights_plus;
    (below ? r.n_minus : r.n_plus) += 1;
    for (size_t l = 0; l < levels; ++l) acc[l] += s.weights[l];
  }
  for (size_t l = 0; l < levels; ++l) {
    r.weights_minus[l] /= r.n_minus;
    r.weights_plus[l] /= r.n_plus;
  }
  const double n = static_cast<double>(p.temperatures.size());
  r.q_minus = r.n_minus / n;
  r.q_plus = r.n_plus / n;
  return r;
}

DiscriminationProblem reduced_problem(const ThresholdProblem& p) {
  const ThresholdReduction r = reduce(p);
  return DiscriminationProblem::from_level_weights(p.hamiltonian, {r.weights_minus, r.weights_plus},
                                                   {r.q_minus, 1.0 - r.q_minus});
}

bool ThresholdDecision::trivial() const {
  for (const Side s : sides)
    if (s != sides.front()) return false;
  return true;
}

ThresholdDecision decide(const ThresholdProblem& p) {
  ThresholdDecision d{reduce(p), solve_commuting(reduced_problem(p)), {}};
  for (const auto& level : d.result.decision_map)
    d.sides.push_back(level.hypothesis == 0 ? Side::Below : Side::Above);
  return d;
}

namespace {

double tanh_factor(double alpha, Temperature t) {
  if (t.is_zero()) return 1.0;
  return std::tanh(alpha * t.beta());
}

Temperature from_tanh_factor(double alpha, double m) {
  if (m >= 1.0) return Temperature::zero();
  if (m <= 0.0) return Temperature::infinite();
  return Temperature::kelvin(alpha / std::atanh(m));
}

}  // namespace

EffectiveTemperatures qubit_effective_temperatures(const ThresholdProblem& p) {
  p.validate();
  if (p.hamiltonian.dim() != 2 || p.hamiltonian.num_levels() != 2)
    throw ValidationError("effective temperatures are defined for nondegenerate qubit Hamiltonians only");
  const double alpha = 0.5 * (p.hamiltonian.level(1).energy - p.hamiltonian.level(0).energy);

  double sum_minus = 0.0, sum_plus = 0.0;
  int n_minus = 0, n_plus = 0;
  for (const auto& t : p.temperatures) {
    if (t < p.t_c) {
      sum_minus += tanh_factor(alpha, t);
      ++n_minus;
    } else {
      sum_plus += tanh_factor(alpha, t);
      ++n_plus;
    }
  }
  return {from_tanh_factor(alpha, sum_minus / n_minus), from_tanh_factor(alpha, sum_plus / n_plus)};
}

}  // namespace thermodiscrim
