#pragma once

#include "thermodiscrim/discrimination.hpp"
#include "thermodiscrim/thermal.hpp"

namespace thermodiscrim {

// Spin in a field: H = B b.sigma with prior eta.
struct FieldHypothesis {
  double strength;
  Vec3 direction;
  double prior = 0.5;

  void validate() const;
  SpectralHamiltonian hamiltonian() const { return build_qubit_hamiltonian(strength, direction); }
};

// rho = (I + v.sigma) / 2
struct BlochState {
  Vec3 v;

  HermitianMatrix to_matrix() const;
};

// v = -tanh(B/T) b; exact -b at T = 0 and 0 at T = inf.
BlochState bloch_of_thermal(const FieldHypothesis& hyp, Temperature t);

// Equal-strength, equal-prior error probability
// (1 - |tanh(B/T)| sqrt(1 - b1.b2) / sqrt 2) / 2.
double noncommuting_error(const Vec3& b1, const Vec3& b2, double strength, Temperature t);

// Unit vector along eta1 v1 - eta2 v2. Throws ValidationError when the
// weighted Bloch vectors coincide.
Vec3 optimal_measurement_direction(const FieldHypothesis& h1, const FieldHypothesis& h2, Temperature t);

struct BlochMeasurement {
  Vec3 axis;
  // Projectors (I +- axis.sigma)/2.
  HermitianMatrix pi_plus;
  HermitianMatrix pi_minus;
  // Hypothesis index (0 or 1) concluded on each outcome, by comparing
  // eta_j tr(rho_j pi).
  int plus_concludes;
  int minus_concludes;
};

BlochMeasurement optimal_measurement(const FieldHypothesis& h1, const FieldHypothesis& h2, Temperature t);

// Routing for two field hypotheses at a common temperature: shared direction
// goes to the commuting solver (energy measurement), anything else to the
// Helstrom route on explicit matrices.
DiscriminationResult discriminate_fields(const FieldHypothesis& h1, const FieldHypothesis& h2, Temperature t);

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

}  // namespace thermodiscrim
