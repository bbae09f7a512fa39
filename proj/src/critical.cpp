#include "thermodiscrim/critical.hpp"

#include <cmath>
#include <sstream>

namespace thermodiscrim {

double q_zero(const CriticalQuery& q) {
  if (q.hamiltonian.level(0).rank != 1)
    throw ValidationError("q0 requires a nondegenerate ground level (ground rank is " +
                          std::to_string(q.hamiltonian.level(0).rank) + ")");
  const ThermalState s = thermal_state(q.hamiltonian, q.t2);
  // 1/Z2 is the ground weight once E0 = 0.
  return 2.0 * (1.0 - s.weights.front());
}

double q_infinity(const CriticalQuery& q) {
  const ThermalState s = thermal_state(q.hamiltonian, q.t2);
  const double d = q.hamiltonian.dim();
  double sum = 0.0;
  for (int j = 0; j < q.hamiltonian.num_levels(); ++j)
    sum += std::abs(q.hamiltonian.level(j).rank / d - s.weights[static_cast<size_t>(j)]);
  return sum;
}

std::pair<double, double> default_critical_bracket(const SpectralHamiltonian& h) {
  const double gap = h.mean_gap();
  return {1e-3 * gap, 1e3 * gap};
}

Temperature critical_temperature(const SpectralHamiltonian& h, std::optional<std::pair<double, double>> bracket,
                                 double tol) {
  auto [lo, hi] = bracket.value_or(default_critical_bracket(h));
  if (!(lo > 0.0 && hi > lo && std::isfinite(hi))) throw ValidationError("bracket must satisfy 0 < lo < hi < inf");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");

  auto f = [&](double t) {
    const CriticalQuery q{h, Temperature::kelvin(t)};
    return q_zero(q) - q_infinity(q);
  };
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return Temperature::kelvin(lo);
  if (fhi == 0.0) return Temperature::kelvin(hi);
  if ((flo < 0) == (fhi < 0)) {
    std::ostringstream os;
    os.precision(12);
    os << "q0 - q_inf does not change sign over [" << lo << ", " << hi << "]: f(lo) = " << flo
       << ", f(hi) = " << fhi;
    throw ValidationError(os.str());
  }

  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    const bool narrow = (hi - lo) <= tol * std::max(1.0, mid);
    if (fm == 0.0 || (narrow && std::abs(fm) <= tol) || mid <= lo || mid >= hi) return Temperature::kelvin(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return Temperature::kelvin(0.5 * (lo + hi));
}

const char* to_string(BestPartner b) {
  switch (b) {
    case BestPartner::BestAtLowT:
      return "BestAtLowT";
    case BestPartner::BestAtHighT:
      return "BestAtHighT";
    case BestPartner::Tie:
      return "Tie";
  }
  return "?";
}

BestPartner classify_best_partner(const SpectralHamiltonian& h, Temperature t2) {
  const CriticalQuery q{h, t2};
  const double diff = q_infinity(q) - q_zero(q);
  if (std::abs(diff) <= kTieTol) return BestPartner::Tie;
  return diff > 0 ? BestPartner::BestAtHighT : BestPartner::BestAtLowT;
}

}  // namespace thermodiscrim
