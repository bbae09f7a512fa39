#pragma once

#include <cstdint>

#include "thermodiscrim/discrimination.hpp"

namespace thermodiscrim {

inline constexpr std::uint64_t kMaxBruteForceAssignments = 1'000'000;

// Exhaustive oracle for the commuting problem: maximum of
// sum_j eta_j tr(rho_j F_j) over every map from energy levels to hypotheses,
// with F_j the sum of the projectors mapped to j. Joint probabilities are taken
// from the density matrices (tr(rho_j Pi_l)), not from the level weights.
// Rejects problems with more than kMaxBruteForceAssignments maps.
double brute_force_success(const DiscriminationProblem& p);

// Depth-first enumeration, single threaded. Reference for the kernel above.
double brute_force_success_serial(const DiscriminationProblem& p);

std::uint64_t brute_force_search_size(const DiscriminationProblem& p);

}  // namespace thermodiscrim
