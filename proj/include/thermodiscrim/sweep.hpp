#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "thermodiscrim/csv.hpp"
#include "thermodiscrim/hermitian.hpp"

namespace thermodiscrim {

// Evenly spaced grid start + i (stop - start) / (steps - 1), i < steps.
struct Range {
  double start;
  double stop;
  int steps;

  std::vector<double> values() const;
};

enum class SweepModel { Binary, Noncommuting, Critical };
enum class SweepVariable { T1, T2, T, Dimension };

const char* to_string(SweepModel m);
const char* to_string(SweepVariable v);
SweepModel parse_sweep_model(const std::string& s);
SweepVariable parse_sweep_variable(const std::string& s);

// One CSV series per element of the Cartesian product of the fixed parameter
// lists (keys in lexicographic order), each evaluated over the whole grid.
//
//   model         variable   parameters (defaults)              columns
//   binary        T1         t2 (1), alpha (1), [d]            t1,t2,alpha,p_error
//   binary        T2         t1 (1), alpha (1), [d]            t1,t2,alpha,p_error
//   binary        T          dt (1), alpha (1), [d]            t,dt,t1,t2,alpha,p_error
//   noncommuting  T          b (0.1,1,10), angle (pi/2)        t,b,angle,p_error
//   critical      dimension  alpha (5)                         d,alpha,t_star
//   critical      T2         alpha (1), d (2)                  t2,alpha,d,q0,q_inf
//
// Binary sweeps use the traceless qubit H = alpha sigma_z unless d is given,
// in which case the d-level oscillator with spacing alpha is used. The
// noncommuting angle is between b1 = z and b2 in the x-z plane. Critical
// sweeps use the oscillator.
struct SweepSpec {
  SweepModel model = SweepModel::Binary;
  SweepVariable variable = SweepVariable::T1;
  std::variant<Range, std::vector<int>> grid = Range{0.01, 10.0, 1000};
  std::map<std::string, std::vector<double>> fixed;

  void validate() const;
  nlohmann::json to_json() const;
};

// Standard figure grids 1..5 (see README for the parameters).
SweepSpec figure_preset(int n);

// Grid points are evaluated in parallel (OpenMP when available); the row
// order is fixed by (series, grid index) regardless of thread count.
CsvTable run_sweep(const SweepSpec& spec);
// Same rows computed on one thread.
CsvTable run_sweep_serial(const SweepSpec& spec);

}  // namespace thermodiscrim
