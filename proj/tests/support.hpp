#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "thermodiscrim/discrimination.hpp"
#include "thermodiscrim/thermal.hpp"

namespace thermodiscrim::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Product of random complex Givens rotations and phases; exactly unitary up to rounding.
inline Matrix random_unitary(Rng& rng, int d) {
  Matrix u = Matrix::Identity(d, d);
  for (int sweep = 0; sweep < 3; ++sweep)
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) {
        const double theta = uniform(rng, 0.0, 2 * std::numbers::pi);
        const Complex phase = std::polar(1.0, uniform(rng, 0.0, 2 * std::numbers::pi));
        Matrix g = Matrix::Identity(d, d);
        g(p, p) = std::cos(theta);
        g(p, q) = -std::sin(theta) * std::conj(phase);
        g(q, p) = std::sin(theta) * phase;
        g(q, q) = std::cos(theta);
        u = g * u;
      }
  for (int k = 0; k < d; ++k) u.col(k) *= std::polar(1.0, uniform(rng, 0.0, 2 * std::numbers::pi));
  return u;
}

inline Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    Vec3 v{g(rng), g(rng), g(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n > 1e-3) return {v[0] / n, v[1] / n, v[2] / n};
  }
}

inline HermitianMatrix random_hermitian(Rng& rng, int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return HermitianMatrix((m + m.adjoint()) / 2.0);
}

// Random spectrum in a random basis; with some probability two energies coincide.
inline SpectralHamiltonian random_hamiltonian(Rng& rng, int d) {
  std::vector<double> e(static_cast<size_t>(d));
  for (auto& x : e) x = uniform(rng, -3.0, 3.0);
  if (d > 2 && uniform(rng, 0, 1) < 0.25) e[1] = e[0];
  return SpectralHamiltonian::from_spectrum(e, random_unitary(rng, d));
}

inline std::vector<double> random_priors(Rng& rng, int n) {
  std::vector<double> p(static_cast<size_t>(n));
  double s = 0;
  for (auto& x : p) s += (x = uniform(rng, 0.05, 1.0));
  for (auto& x : p) x /= s;
  return p;
}

inline DiscriminationProblem random_commuting_problem(Rng& rng, int d, int n) {
  const auto h = random_hamiltonian(rng, d);
  std::vector<ThermalState> states;
  for (int j = 0; j < n; ++j) states.push_back(thermal_state(h, Temperature::kelvin(uniform(rng, 0.05, 8.0))));
  return DiscriminationProblem::from_states(states, random_priors(rng, n));
}

}  // namespace thermodiscrim::testing
