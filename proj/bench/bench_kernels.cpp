// Serial reference vs parallel kernel timings.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "thermodiscrim/brute_force.hpp"
#include "thermodiscrim/sweep.hpp"

using namespace thermodiscrim;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.4f s   parallel %9.4f s   speedup %5.2fx   %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  {
    // 7 levels, 6 hypotheses: 6^7 = 279936 assignments
    const auto h = build_lho_hamiltonian(7, 0.7);
    std::vector<ThermalState> states;
    for (double t : {0.2, 0.5, 1.0, 2.0, 4.0, 8.0}) states.push_back(thermal_state(h, Temperature::kelvin(t)));
    const auto p = DiscriminationProblem::uniform(states);
    double a = 0, b = 0;
    const double ts = seconds([&] { a = brute_force_success_serial(p); }, 3);
    const double tp = seconds([&] { b = brute_force_success(p); }, 3);
    report("brute force (6^7 maps)", ts, tp, a == b);
  }

  for (int fig : {2, 3, 5}) {
    const auto spec = figure_preset(fig);
    CsvTable a, b;
    const double ts = seconds([&] { a = run_sweep_serial(spec); }, 3);
    const double tp = seconds([&] { b = run_sweep(spec); }, 3);
    char name[32];
    std::snprintf(name, sizeof name, "figure %d sweep (%zu rows)", fig, a.rows.size());
    report(name, ts, tp, a.rows == b.rows);
  }
  return 0;
}
