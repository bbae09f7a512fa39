#include "thermodiscrim/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace thermodiscrim {

Temperature Temperature::kelvin(double t) {
  if (!(t >= 0.0)) {
    std::ostringstream os;
    os << "temperature must be nonnegative, got " << t;
    throw ValidationError(os.str());
  }
  return Temperature(t);
}

Temperature Temperature::from_beta(double beta) {
  if (!(beta >= 0.0)) {
    std::ostringstream os;
    os << "inverse temperature must be nonnegative, got " << beta;
    throw ValidationError(os.str());
  }
  if (beta == 0.0) return infinite();
  if (std::isinf(beta)) return zero();
  return Temperature(1.0 / beta);
}

double Temperature::beta() const {
  if (t_ == 0.0) return std::numeric_limits<double>::infinity();
  if (is_infinite()) return 0.0;
  return 1.0 / t_;
}

namespace {

int rounded_rank(const HermitianMatrix& p) { return static_cast<int>(std::lround(p.trace())); }

}  // namespace

SpectralHamiltonian SpectralHamiltonian::from_levels(std::vector<double> energies,
                                                     std::vector<HermitianMatrix> projectors, double tol) {
  if (energies.empty() || energies.size() != projectors.size())
    throw ValidationError("Hamiltonian needs one projector per energy and at least one level");
  const int dim = projectors.front().dim();
  for (size_t j = 0; j < energies.size(); ++j) {
    if (!std::isfinite(energies[j])) throw ValidationError("energies must be finite");
    if (projectors[j].dim() != dim) throw ValidationError("projectors have mismatched dimensions");
  }

  std::vector<size_t> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return energies[a] < energies[b]; });

  std::vector<EnergyLevel> levels;
  for (size_t idx : order) {
    if (!levels.empty() && energies[idx] - levels.back().energy <= kEnergyMergeTol) {
      levels.back().projector += projectors[idx];
    } else {
      levels.push_back({energies[idx], projectors[idx], 0});
    }
  }

  HermitianMatrix total = HermitianMatrix::zero(dim);
  int rank_sum = 0;
  for (size_t j = 0; j < levels.size(); ++j) {
    auto& lvl = levels[j];
    const Matrix& p = lvl.projector.matrix();
    if ((p * p - p).cwiseAbs().maxCoeff() > tol) {
      std::ostringstream os;
      os << "projector for energy " << lvl.energy << " is not idempotent";
      throw ValidationError(os.str());
    }
    for (size_t k = 0; k < j; ++k) {
      if ((p * levels[k].projector.matrix()).cwiseAbs().maxCoeff() > tol) {
        std::ostringstream os;
        os << "projectors for energies " << levels[k].energy << " and " << lvl.energy << " are not orthogonal";
        throw ValidationError(os.str());
      }
    }
    lvl.rank = rounded_rank(lvl.projector);
    if (lvl.rank < 1) throw ValidationError("zero projector in Hamiltonian");
    rank_sum += lvl.rank;
    total += lvl.projector;
  }
  if (total.max_abs_diff(HermitianMatrix::identity(dim)) > tol)
    throw ValidationError("projectors do not sum to the identity");
  if (rank_sum != dim) throw ValidationError("projector ranks do not add up to the dimension");

  return SpectralHamiltonian(std::move(levels), dim);
}

SpectralHamiltonian SpectralHamiltonian::from_spectrum(std::span<const double> energies, const Matrix& basis) {
  const auto n = static_cast<Eigen::Index>(energies.size());
  if (basis.rows() != n || basis.cols() != n) throw ValidationError("basis must be square and match the spectrum");
  if ((basis.adjoint() * basis - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() > kReconstructionTol)
    throw ValidationError("basis is not unitary");
  std::vector<double> e(energies.begin(), energies.end());
  std::vector<HermitianMatrix> projectors;
  projectors.reserve(e.size());
  for (Eigen::Index k = 0; k < n; ++k) projectors.push_back(HermitianMatrix::outer(basis.col(k)));
  return from_levels(std::move(e), std::move(projectors));
}

SpectralHamiltonian SpectralHamiltonian::diagonal(std::span<const double> energies) {
  const auto n = static_cast<Eigen::Index>(energies.size());
  return from_spectrum(energies, Matrix::Identity(n, n));
}

SpectralHamiltonian SpectralHamiltonian::from_matrix(const HermitianMatrix& h) {
  const auto ed = eigendecompose(h);
  return from_spectrum(ed.eigenvalues, ed.eigenvectors);
}

double SpectralHamiltonian::mean_gap() const {
  if (levels_.size() < 2) return 1.0;
  return (levels_.back().energy - levels_.front().energy) / static_cast<double>(levels_.size() - 1);
}

SpectralHamiltonian SpectralHamiltonian::shifted(double x) const {
  auto levels = levels_;
  for (auto& l : levels) l.energy += x;
  return SpectralHamiltonian(std::move(levels), dim_);
}

HermitianMatrix SpectralHamiltonian::to_matrix() const {
  HermitianMatrix h = HermitianMatrix::zero(dim_);
  for (const auto& l : levels_) h += l.projector * l.energy;
  return h;
}

bool SpectralHamiltonian::same_as(const SpectralHamiltonian& o, double tol) const {
  if (dim_ != o.dim_ || levels_.size() != o.levels_.size()) return false;
  for (size_t j = 0; j < levels_.size(); ++j) {
    if (std::abs(levels_[j].energy - o.levels_[j].energy) > tol) return false;
    if (levels_[j].projector.max_abs_diff(o.levels_[j].projector) > tol) return false;
  }
  return true;
}

std::array<Matrix, 3> pauli_matrices() {
  Matrix x(2, 2), y(2, 2), z(2, 2);
  const Complex i(0.0, 1.0);
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {x, y, z};
}

HermitianMatrix pauli_dot(const Vec3& n) {
  const auto s = pauli_matrices();
  return HermitianMatrix(n[0] * s[0] + n[1] * s[1] + n[2] * s[2]);
}

SpectralHamiltonian build_qubit_hamiltonian(double alpha, const Vec3& direction) {
  if (!(alpha > 0.0)) throw ValidationError("qubit Hamiltonian needs alpha > 0");
  const double norm = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1] +
                                direction[2] * direction[2]);
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "direction must be a unit vector, |n| = " << norm;
    throw ValidationError(os.str());
  }
  const HermitianMatrix ns = pauli_dot(direction);
  const HermitianMatrix id = HermitianMatrix::identity(2);
  return SpectralHamiltonian::from_levels({-alpha, alpha}, {(id - ns) * 0.5, (id + ns) * 0.5});
}

SpectralHamiltonian build_lho_hamiltonian(int d, double alpha, double ground_energy) {
  if (d < 2) throw ValidationError("oscillator dimension must be at least 2");
  if (!(alpha > 0.0)) throw ValidationError("oscillator spacing alpha must be positive");
  std::vector<double> e(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) e[static_cast<size_t>(j)] = ground_energy + alpha * j;
  return SpectralHamiltonian::diagonal(e);
}

ThermalState thermal_state(const SpectralHamiltonian& h, Temperature t) {
  const double beta = t.beta();
  const double e0 = h.ground_energy();
  std::vector<double> w;
  w.reserve(static_cast<size_t>(h.num_levels()));
  double z = 0.0;
  for (const auto& l : h.levels()) {
    double boltzmann;
    if (std::isinf(beta)) {
      boltzmann = (&l == &h.levels().front()) ? 1.0 : 0.0;
    } else {
      boltzmann = std::exp(-beta * (l.energy - e0));
    }
    const double g = boltzmann * l.rank;
    w.push_back(g);
    z += g;
  }
  for (double& x : w) x /= z;
  return ThermalState{h, t, std::move(w), z};
}

HermitianMatrix density_from_weights(const SpectralHamiltonian& h, std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != h.num_levels())
    throw ValidationError("weight vector does not match the number of energy levels");
  HermitianMatrix rho = HermitianMatrix::zero(h.dim());
  for (int j = 0; j < h.num_levels(); ++j) {
    const auto& l = h.level(j);
    rho += l.projector * (weights[static_cast<size_t>(j)] / l.rank);
  }
  return rho;
}

HermitianMatrix to_matrix(const ThermalState& s) { return density_from_weights(s.hamiltonian, s.weights); }

}  // namespace thermodiscrim
