#include "thermodiscrim/brute_force.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace thermodiscrim {

namespace {

// joint[l * n + j] = eta_j tr(rho_j Pi_l)
std::vector<double> joint_table(const DiscriminationProblem& p) {
  const int n = p.num_hypotheses();
  const int levels = p.num_levels();
  std::vector<double> joint(static_cast<size_t>(n * levels));
  for (int l = 0; l < levels; ++l)
    for (int j = 0; j < n; ++j)
      joint[static_cast<size_t>(l * n + j)] = p.prior(j) * trace_product(p.state(j), p.basis().level(l).projector);
  return joint;
}

void check_size(const DiscriminationProblem& p) {
  const auto size = brute_force_search_size(p);
  if (size > kMaxBruteForceAssignments) {
    std::ostringstream os;
    os << "brute-force search space " << p.num_hypotheses() << "^" << p.num_levels() << " exceeds "
       << kMaxBruteForceAssignments << " assignments";
    throw ValidationError(os.str());
  }
}

double dfs(const std::vector<double>& joint, int n, int levels, int l, double acc) {
  if (l == levels) return acc;
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j)
    best = std::max(best, dfs(joint, n, levels, l + 1, acc + joint[static_cast<size_t>(l * n + j)]));
  return best;
}

}  // namespace

std::uint64_t brute_force_search_size(const DiscriminationProblem& p) {
  std::uint64_t size = 1;
  for (int l = 0; l < p.num_levels(); ++l) {
    size *= static_cast<std::uint64_t>(p.num_hypotheses());
    if (size > kMaxBruteForceAssignments) return kMaxBruteForceAssignments + 1;
  }
  return size;
}

double brute_force_success_serial(const DiscriminationProblem& p) {
  check_size(p);
  const auto joint = joint_table(p);
  return dfs(joint, p.num_hypotheses(), p.num_levels(), 0, 0.0);
}

double brute_force_success(const DiscriminationProblem& p) {
  check_size(p);
  const auto joint = joint_table(p);
  const int n = p.num_hypotheses();
  const int levels = p.num_levels();

  // Parallel over assignments of the first `split` levels; the rest is the
  // serial DFS, so every assignment is summed in the same order as there.
  int split = 0;
  std::int64_t prefixes = 1;
  while (split < levels && prefixes < 256) {
    prefixes *= n;
    ++split;
  }

  double best = -std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(max : best) schedule(dynamic, 1)
  for (std::int64_t code = 0; code < prefixes; ++code) {
    std::vector<int> digits(static_cast<size_t>(split));
    std::int64_t rest = code;
    for (int l = split - 1; l >= 0; --l) {
      digits[static_cast<size_t>(l)] = static_cast<int>(rest % n);
      rest /= n;
    }
    double acc = 0.0;
    for (int l = 0; l < split; ++l) acc += joint[static_cast<size_t>(l * n + digits[static_cast<size_t>(l)])];
    best = std::max(best, dfs(joint, n, levels, split, acc));
  }
  return best;
}

}  // namespace thermodiscrim
