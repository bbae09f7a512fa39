#include "thermodiscrim/bloch.hpp"

#include <cmath>
#include <sstream>

namespace thermodiscrim {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

void FieldHypothesis::validate() const {
  if (!(strength > 0.0)) throw ValidationError("field strength must be positive");
  if (std::abs(norm(direction) - 1.0) > 1e-12) throw ValidationError("field direction must be a unit vector");
  if (!(prior >= 0.0 && prior <= 1.0)) throw ValidationError("prior must lie in [0, 1]");
}

HermitianMatrix BlochState::to_matrix() const {
  return (HermitianMatrix::identity(2) + pauli_dot(v)) * 0.5;
}

namespace {

double tanh_factor(double strength, Temperature t) {
  if (t.is_zero()) return 1.0;
  return std::tanh(strength * t.beta());
}

}  // namespace

BlochState bloch_of_thermal(const FieldHypothesis& hyp, Temperature t) {
  hyp.validate();
  const double f = tanh_factor(hyp.strength, t);
  return {{-f * hyp.direction[0], -f * hyp.direction[1], -f * hyp.direction[2]}};
}

double noncommuting_error(const Vec3& b1, const Vec3& b2, double strength, Temperature t) {
  FieldHypothesis{strength, b1}.validate();
  FieldHypothesis{strength, b2}.validate();
  const double c = std::min(1.0, dot(b1, b2));
  return 0.5 * (1.0 - std::abs(tanh_factor(strength, t)) * std::sqrt(1.0 - c) / std::sqrt(2.0));
}

Vec3 optimal_measurement_direction(const FieldHypothesis& h1, const FieldHypothesis& h2, Temperature t) {
  const Vec3 v1 = bloch_of_thermal(h1, t).v;
  const Vec3 v2 = bloch_of_thermal(h2, t).v;
  Vec3 m{h1.prior * v1[0] - h2.prior * v2[0], h1.prior * v1[1] - h2.prior * v2[1], h1.prior * v1[2] - h2.prior * v2[2]};
  const double n = norm(m);
  if (!(n > 1e-14)) {
    std::ostringstream os;
    os << "weighted Bloch vectors coincide (|eta1 v1 - eta2 v2| = " << n << "); no preferred measurement axis";
    throw ValidationError(os.str());
  }
  for (double& x : m) x /= n;
  return m;
}

BlochMeasurement optimal_measurement(const FieldHypothesis& h1, const FieldHypothesis& h2, Temperature t) {
  const Vec3 axis = optimal_measurement_direction(h1, h2, t);
  const HermitianMatrix id = HermitianMatrix::identity(2);
  const HermitianMatrix ms = pauli_dot(axis);
  BlochMeasurement m{axis, (id + ms) * 0.5, (id - ms) * 0.5, 0, 1};

  const HermitianMatrix rho1 = bloch_of_thermal(h1, t).to_matrix();
  const HermitianMatrix rho2 = bloch_of_thermal(h2, t).to_matrix();
  const auto concludes = [&](const HermitianMatrix& pi) {
    return h1.prior * trace_product(rho1, pi) >= h2.prior * trace_product(rho2, pi) ? 0 : 1;
  };
  // Lopsided priors can make both outcomes conclude the same hypothesis.
  m.plus_concludes = concludes(m.pi_plus);
  m.minus_concludes = concludes(m.pi_minus);
  return m;
}

DiscriminationResult discriminate_fields(const FieldHypothesis& h1, const FieldHypothesis& h2, Temperature t) {
  h1.validate();
  h2.validate();
  if (std::abs(h1.prior + h2.prior - 1.0) > kPriorSumTol) throw ValidationError("priors must sum to 1");

  const ThermalState s1 = thermal_state(h1.hamiltonian(), t);
  const ThermalState s2 = thermal_state(h2.hamiltonian(), t);
  const HermitianMatrix rho1 = to_matrix(s1);
  const HermitianMatrix rho2 = to_matrix(s2);

  const Vec3& a = h1.direction;
  const Vec3& b = h2.direction;
  const Vec3 cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (norm(cross) > 1e-12) return helstrom_binary(rho1, rho2, h1.prior);

  // Collinear fields commute: measure in the eigenbasis of b1.sigma.
  const SpectralHamiltonian basis = build_qubit_hamiltonian(1.0, a);
  std::vector<std::vector<double>> weights(2);
  for (int l = 0; l < 2; ++l) {
    weights[0].push_back(trace_product(rho1, basis.level(l).projector));
    weights[1].push_back(trace_product(rho2, basis.level(l).projector));
  }
  return solve_commuting(
      DiscriminationProblem::from_level_weights(basis, std::move(weights), {h1.prior, 1.0 - h1.prior}));
}

}  // namespace thermodiscrim
