#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thermodiscrim/hermitian.hpp"
#include "thermodiscrim/thermal.hpp"

namespace thermodiscrim {

inline constexpr double kPriorSumTol = 1e-12;
inline constexpr double kPovmTol = 1e-10;
inline constexpr double kCertificateTol = 1e-9;
// Relative tolerance for declaring two joint probabilities equal at a level.
inline constexpr double kTieRelTol = 1e-12;

// N hypotheses that are all diagonal in one shared energy basis.
//
// level_weights[j][l] = tr(rho_j Pi_l). The density matrices are kept next to
// the weights so matrix-level checks (certificates, brute force) never go
// through the weight shortcut.
class DiscriminationProblem {
 public:
  // All states must share the Hamiltonian (same projectors and energies).
  static DiscriminationProblem from_states(std::span<const ThermalState> states, std::vector<double> priors);
  static DiscriminationProblem uniform(std::span<const ThermalState> states);
  // Arbitrary commuting states, given by their per-level weights.
  static DiscriminationProblem from_level_weights(SpectralHamiltonian basis, std::vector<std::vector<double>> weights,
                                                  std::vector<double> priors);

  int num_hypotheses() const { return static_cast<int>(priors_.size()); }
  int num_levels() const { return basis_.num_levels(); }
  int dim() const { return basis_.dim(); }
  const SpectralHamiltonian& basis() const { return basis_; }
  const std::vector<double>& priors() const { return priors_; }
  double prior(int j) const { return priors_[static_cast<size_t>(j)]; }
  double weight(int j, int l) const { return weights_[static_cast<size_t>(j)][static_cast<size_t>(l)]; }
  const std::vector<double>& weights(int j) const { return weights_[static_cast<size_t>(j)]; }
  const HermitianMatrix& state(int j) const { return states_[static_cast<size_t>(j)]; }

 private:
  DiscriminationProblem(SpectralHamiltonian basis, std::vector<std::vector<double>> weights,
                        std::vector<double> priors);

  SpectralHamiltonian basis_;
  std::vector<std::vector<double>> weights_;
  std::vector<double> priors_;
  std::vector<HermitianMatrix> states_;
};

// Effects F_j, one per hypothesis; a hypothesis that is never concluded
// carries an explicit zero effect.
struct Povm {
  std::vector<HermitianMatrix> effects;

  // Each effect PSD and sum equal to identity, both within tol.
  bool is_valid(double tol = kPovmTol) const;
};

// K >= eta_j rho_j for every j; tr K bounds the success probability from above.
struct DualCertificate {
  HermitianMatrix k;
  std::vector<HermitianMatrix> gaps;  // K - eta_j rho_j
  double trace_value;
};

struct LevelDecision {
  int hypothesis;
  bool tie;  // several hypotheses attain the maximum; the smallest index is reported
};

struct DiscriminationResult {
  double p_error;
  double p_success;
  Povm povm;
  std::optional<DualCertificate> certificate;
  // Per energy level; empty for the general (noncommuting) binary route.
  std::vector<LevelDecision> decision_map;
};

// Helstrom measurement for two arbitrary states:
// p_error = (1 - ||eta1 rho1 - eta2 rho2||_1) / 2, POVM = (P+, I - P+) with P+
// the projector onto the nonnegative eigenspace of eta1 rho1 - eta2 rho2.
DiscriminationResult helstrom_binary(const HermitianMatrix& rho1, const HermitianMatrix& rho2, double eta1);

// Closed form for two qubit thermal states of H = alpha n.sigma (gap 2 alpha),
// equal priors. Either beta may be +inf.
double qubit_binary_closed_form(double alpha, double beta1, double beta2);

// Optimal measurement for commuting hypotheses: each energy level is assigned
// to the hypothesis with the largest joint probability eta_j tr(rho_j Pi_l),
// F_j is the sum of the projectors assigned to j, and the certificate is
// K = sum_l x_l Pi_l with x_l = max_j eta_j tr(rho_j Pi_l) / tr(Pi_l).
DiscriminationResult solve_commuting(const DiscriminationProblem& p);

struct GroundStateDiscrimination {
  double p_error;
  double p_failure;  // failure rate of unambiguous discrimination
};

// Ground state of h against its thermal state at beta2, equal priors.
GroundStateDiscrimination ground_vs_thermal(const SpectralHamiltonian& h, double beta2);

// All gaps K - eta_j rho_j PSD, sum F_j = I, every effect PSD, and
// tr(F_j (K - eta_j rho_j)) <= tol for each j. The gaps are recomputed from p
// rather than taken from r.
bool verify_certificate(const DiscriminationProblem& p, const DiscriminationResult& r, double tol = kCertificateTol);

// sum_j eta_j tr(rho_j F_j), evaluated with matrices.
double success_probability(const DiscriminationProblem& p, const Povm& povm);

}  // namespace thermodiscrim
