#pragma once

#include <array>
#include <limits>
#include <span>
#include <vector>

#include "thermodiscrim/hermitian.hpp"

namespace thermodiscrim {

using Vec3 = std::array<double, 3>;

// Energies closer than this at construction collapse into one degenerate level.
inline constexpr double kEnergyMergeTol = 1e-12;
inline constexpr double kWeightSumTol = 1e-12;

// Temperature in units where k_B = 1, so beta = 1/T. T = 0 maps to beta = +inf
// and T = +inf maps to beta = 0; both ends are exact.
class Temperature {
 public:
  static Temperature kelvin(double t);
  static Temperature from_beta(double beta);
  static Temperature zero() { return kelvin(0.0); }
  static Temperature infinite() { return kelvin(std::numeric_limits<double>::infinity()); }

  double value() const { return t_; }
  double beta() const;
  bool is_zero() const { return t_ == 0.0; }
  bool is_infinite() const { return t_ == std::numeric_limits<double>::infinity(); }

  friend bool operator==(Temperature a, Temperature b) { return a.t_ == b.t_; }
  friend auto operator<=>(Temperature a, Temperature b) { return a.t_ <=> b.t_; }

 private:
  explicit Temperature(double t) : t_(t) {}
  double t_;
};

struct EnergyLevel {
  double energy;
  HermitianMatrix projector;
  int rank;
};

// H = sum_j E_j Pi_j with distinct E_j in increasing order.
class SpectralHamiltonian {
 public:
  // Projectors are checked for idempotence, mutual orthogonality and
  // completeness. Energies need not be sorted or distinct; equal energies
  // (within kEnergyMergeTol) have their projectors summed.
  static SpectralHamiltonian from_levels(std::vector<double> energies, std::vector<HermitianMatrix> projectors,
                                         double tol = kReconstructionTol);
  // One energy per column of the unitary `basis`.
  static SpectralHamiltonian from_spectrum(std::span<const double> energies, const Matrix& basis);
  // Diagonal in the computational basis.
  static SpectralHamiltonian diagonal(std::span<const double> energies);
  static SpectralHamiltonian from_matrix(const HermitianMatrix& h);

  int dim() const { return dim_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }
  const std::vector<EnergyLevel>& levels() const { return levels_; }
  const EnergyLevel& level(int j) const { return levels_[static_cast<size_t>(j)]; }
  double ground_energy() const { return levels_.front().energy; }
  double mean_gap() const;

  // H + x I
  SpectralHamiltonian shifted(double x) const;
  HermitianMatrix to_matrix() const;

  // Same projectors (within tol) and energies (within tol).
  bool same_as(const SpectralHamiltonian& o, double tol = kReconstructionTol) const;

 private:
  SpectralHamiltonian(std::vector<EnergyLevel> levels, int dim) : levels_(std::move(levels)), dim_(dim) {}

  std::vector<EnergyLevel> levels_;
  int dim_;
};

// H = alpha n.sigma: energies (-alpha, +alpha), Pi_0 = (I - n.sigma)/2.
SpectralHamiltonian build_qubit_hamiltonian(double alpha, const Vec3& direction);
// H = E0 I + alpha sum_j j|j><j|, j = 0..d-1.
SpectralHamiltonian build_lho_hamiltonian(int d, double alpha, double ground_energy = 0.0);

std::array<Matrix, 3> pauli_matrices();
// n.sigma
HermitianMatrix pauli_dot(const Vec3& n);

// Gibbs state as per-level occupation weights w_j = tr(rho Pi_j).
struct ThermalState {
  SpectralHamiltonian hamiltonian;
  Temperature temperature;
  std::vector<double> weights;
  // Partition function of the ground-shifted Hamiltonian, sum_j tr(Pi_j) e^{-beta (E_j - E_0)}.
  double partition_value;

  double beta() const { return temperature.beta(); }
};

ThermalState thermal_state(const SpectralHamiltonian& h, Temperature t);

// sum_j (w_j / tr Pi_j) Pi_j
HermitianMatrix to_matrix(const ThermalState& s);
HermitianMatrix density_from_weights(const SpectralHamiltonian& h, std::span<const double> weights);

}  // namespace thermodiscrim
