#include "thermodiscrim/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace thermodiscrim {

namespace {

void check_priors(const std::vector<double>& priors) {
  if (priors.size() < 2) throw ValidationError("discrimination needs at least two hypotheses");
  double sum = 0.0;
  for (double eta : priors) {
    if (!(eta >= 0.0)) throw ValidationError("priors must be nonnegative");
    sum += eta;
  }
  if (std::abs(sum - 1.0) > kPriorSumTol) {
    std::ostringstream os;
    os.precision(17);
    os << "priors must sum to 1, got " << sum;
    throw ValidationError(os.str());
  }
}

void check_density(const HermitianMatrix& rho, const char* name) {
  if (std::abs(rho.trace() - 1.0) > kPovmTol) {
    std::ostringstream os;
    os << name << " is not a state: trace = " << rho.trace();
    throw ValidationError(os.str());
  }
  if (!is_psd(rho, kPovmTol)) throw ValidationError(std::string(name) + " is not a state: not positive semidefinite");
}

}  // namespace

DiscriminationProblem::DiscriminationProblem(SpectralHamiltonian basis, std::vector<std::vector<double>> weights,
                                             std::vector<double> priors)
    : basis_(std::move(basis)), weights_(std::move(weights)), priors_(std::move(priors)) {
  check_priors(priors_);
  if (weights_.size() != priors_.size()) throw ValidationError("need one weight vector per prior");
  states_.reserve(weights_.size());
  for (const auto& w : weights_) {
    double sum = 0.0;
    for (double x : w) {
      if (!(x >= -kWeightSumTol)) throw ValidationError("level weights must be nonnegative");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-10) throw ValidationError("level weights must sum to 1");
    states_.push_back(density_from_weights(basis_, w));
  }
}

DiscriminationProblem DiscriminationProblem::from_states(std::span<const ThermalState> states,
                                                         std::vector<double> priors) {
  if (states.size() != priors.size()) throw ValidationError("need one prior per state");
  if (states.empty()) throw ValidationError("discrimination needs at least two hypotheses");
  const SpectralHamiltonian& h = states.front().hamiltonian;
  std::vector<std::vector<double>> weights;
  for (const auto& s : states) {
    if (!s.hamiltonian.same_as(h))
      throw ValidationError("states do not share one Hamiltonian; the commuting solver does not apply");
    weights.push_back(s.weights);
  }
  return DiscriminationProblem(h, std::move(weights), std::move(priors));
}

DiscriminationProblem DiscriminationProblem::uniform(std::span<const ThermalState> states) {
  return from_states(states, std::vector<double>(states.size(), 1.0 / static_cast<double>(states.size())));
}

DiscriminationProblem DiscriminationProblem::from_level_weights(SpectralHamiltonian basis,
                                                                std::vector<std::vector<double>> weights,
                                                                std::vector<double> priors) {
  for (const auto& w : weights)
    if (static_cast<int>(w.size()) != basis.num_levels())
      throw ValidationError("weight vector does not match the number of energy levels");
  return DiscriminationProblem(std::move(basis), std::move(weights), std::move(priors));
}

bool Povm::is_valid(double tol) const {
  if (effects.empty()) return false;
  const int d = effects.front().dim();
  HermitianMatrix sum = HermitianMatrix::zero(d);
  for (const auto& f : effects) {
    if (f.dim() != d || !is_psd(f, tol)) return false;
    sum += f;
  }
  return sum.max_abs_diff(HermitianMatrix::identity(d)) <= tol;
}

DiscriminationResult helstrom_binary(const HermitianMatrix& rho1, const HermitianMatrix& rho2, double eta1) {
  if (rho1.dim() != rho2.dim()) throw ValidationError("states have different dimensions");
  if (!(eta1 >= 0.0 && eta1 <= 1.0)) throw ValidationError("prior must lie in [0, 1]");
  check_density(rho1, "rho1");
  check_density(rho2, "rho2");
  const double eta2 = 1.0 - eta1;

  const HermitianMatrix delta = rho1 * eta1 - rho2 * eta2;
  const auto ed = eigendecompose(delta);
  double norm = 0.0;
  HermitianMatrix positive_part = HermitianMatrix::zero(rho1.dim());
  for (size_t k = 0; k < ed.eigenvalues.size(); ++k) {
    const double l = ed.eigenvalues[k];
    norm += std::abs(l);
    if (l > 0) positive_part += HermitianMatrix::outer(ed.eigenvectors.col(static_cast<Eigen::Index>(k))) * l;
  }
  const HermitianMatrix p_plus = ed.spectral_projector(0.0);
  const HermitianMatrix p_minus = HermitianMatrix::identity(rho1.dim()) - p_plus;

  DiscriminationResult r;
  r.p_error = 0.5 * (1.0 - norm);
  r.p_success = 1.0 - r.p_error;
  r.povm.effects = {p_plus, p_minus};

  // K = eta2 rho2 + (eta1 rho1 - eta2 rho2)_+ dominates both weighted states.
  const HermitianMatrix k = rho2 * eta2 + positive_part;
  r.certificate = DualCertificate{k, {k - rho1 * eta1, k - rho2 * eta2}, k.trace()};
  return r;
}

double qubit_binary_closed_form(double alpha, double beta1, double beta2) {
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (!(beta1 >= 0.0) || !(beta2 >= 0.0)) throw ValidationError("inverse temperatures must be nonnegative");
  if (beta1 == beta2) return 0.5;
  if (std::isinf(beta1)) return 1.0 / (2.0 * (1.0 + std::exp(-2.0 * alpha * beta2)));
  if (std::isinf(beta2)) return 1.0 / (2.0 * (1.0 + std::exp(-2.0 * alpha * beta1)));

  const double a = alpha * beta1;
  const double b = alpha * beta2;
  double ratio;
  if (std::max(a, b) < 300.0) {
    ratio = std::abs(std::sinh(a - b)) / (std::cosh(a) * std::cosh(b));
  } else {
    // cosh overflows; sinh(a - b) / (cosh a cosh b) = tanh a - tanh b
    ratio = std::abs(std::tanh(a) - std::tanh(b));
  }
  return 0.5 * (1.0 - 0.5 * ratio);
}

DiscriminationResult solve_commuting(const DiscriminationProblem& p) {
  const int n = p.num_hypotheses();
  const int levels = p.num_levels();
  const int d = p.dim();

  DiscriminationResult r;
  r.povm.effects.assign(static_cast<size_t>(n), HermitianMatrix::zero(d));
  r.decision_map.reserve(static_cast<size_t>(levels));
  HermitianMatrix k = HermitianMatrix::zero(d);
  double success = 0.0;

  for (int l = 0; l < levels; ++l) {
    double best = -1.0;
    for (int j = 0; j < n; ++j)
      if (p.prior(j) > 0.0) best = std::max(best, p.prior(j) * p.weight(j, l));

    int winner = -1;
    int attaining = 0;
    for (int j = 0; j < n; ++j) {
      if (p.prior(j) <= 0.0) continue;
      const double v = p.prior(j) * p.weight(j, l);
      if (best - v <= kTieRelTol * best) {
        if (winner < 0) winner = j;
        ++attaining;
      }
    }

    const auto& level = p.basis().level(l);
    r.povm.effects[static_cast<size_t>(winner)] += level.projector;
    r.decision_map.push_back({winner, attaining > 1});
    k += level.projector * (best / level.rank);
    success += best;
  }

  r.p_success = success;
  r.p_error = 1.0 - success;

  DualCertificate cert{k, {}, k.trace()};
  cert.gaps.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) cert.gaps.push_back(k - p.state(j) * p.prior(j));
  r.certificate = std::move(cert);
  return r;
}

GroundStateDiscrimination ground_vs_thermal(const SpectralHamiltonian& h, double beta2) {
  const ThermalState rho2 = thermal_state(h, Temperature::from_beta(beta2));
  GroundStateDiscrimination g;
  g.p_error = 0.5 * rho2.weights.front();
  g.p_failure = 0.5 * (1.0 + g.p_error);
  return g;
}

double success_probability(const DiscriminationProblem& p, const Povm& povm) {
  if (static_cast<int>(povm.effects.size()) != p.num_hypotheses())
    throw ValidationError("POVM must have one effect per hypothesis");
  double s = 0.0;
  for (int j = 0; j < p.num_hypotheses(); ++j)
    s += p.prior(j) * trace_product(p.state(j), povm.effects[static_cast<size_t>(j)]);
  return s;
}

bool verify_certificate(const DiscriminationProblem& p, const DiscriminationResult& r, double tol) {
  if (!r.certificate) return false;
  if (static_cast<int>(r.povm.effects.size()) != p.num_hypotheses()) return false;
  if (!r.povm.is_valid(tol)) return false;
  const HermitianMatrix& k = r.certificate->k;
  if (k.dim() != p.dim()) return false;
  for (int j = 0; j < p.num_hypotheses(); ++j) {
    const HermitianMatrix gap = k - p.state(j) * p.prior(j);
    if (!is_psd(gap, tol)) return false;
    if (std::abs(trace_product(r.povm.effects[static_cast<size_t>(j)], gap)) > tol) return false;
  }
  return true;
}

}  // namespace thermodiscrim
