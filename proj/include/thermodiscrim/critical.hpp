#pragma once

#include <optional>
#include <utility>

#include "thermodiscrim/thermal.hpp"

namespace thermodiscrim {

// Limits of ||rho(T1) - rho(T2)||_1 as T1 -> 0 (q0) and T1 -> inf (q_inf),
// both as functions of the fixed T2.
struct CriticalQuery {
  SpectralHamiltonian hamiltonian;
  Temperature t2;
};

// 2 (Z2 - 1) / Z2 with Z2 the ground-shifted partition function.
// Throws ValidationError when the ground level is degenerate.
double q_zero(const CriticalQuery& q);
// sum_j |tr(Pi_j)/d - w_j|
double q_infinity(const CriticalQuery& q);

inline constexpr double kCriticalTol = 1e-12;
inline constexpr double kTieTol = 1e-10;

// (1e-3, 1e3) times the mean level spacing.
std::pair<double, double> default_critical_bracket(const SpectralHamiltonian& h);

// Bisection on f(T) = q0(T) - q_inf(T). Stops once the bracket is narrower
// than tol * max(1, T) and |f| <= tol (or the bracket stops shrinking).
// Throws ValidationError when f has the same sign at both ends.
Temperature critical_temperature(const SpectralHamiltonian& h, std::optional<std::pair<double, double>> bracket = {},
                                 double tol = kCriticalTol);

enum class BestPartner { BestAtLowT, BestAtHighT, Tie };

const char* to_string(BestPartner b);

// q_inf > q0: T2 is easiest to tell apart from very hot states.
BestPartner classify_best_partner(const SpectralHamiltonian& h, Temperature t2);

}  // namespace thermodiscrim
