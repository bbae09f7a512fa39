#include "thermodiscrim/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <set>

#include "thermodiscrim/bloch.hpp"
#include "thermodiscrim/critical.hpp"
#include "thermodiscrim/discrimination.hpp"

namespace thermodiscrim {

std::vector<double> Range::values() const {
  std::vector<double> v(static_cast<size_t>(steps));
  const double h = (stop - start) / (steps - 1);
  for (int i = 0; i < steps; ++i) v[static_cast<size_t>(i)] = start + i * h;
  v.back() = stop;
  return v;
}

const char* to_string(SweepModel m) {
  switch (m) {
    case SweepModel::Binary:
      return "binary";
    case SweepModel::Noncommuting:
      return "noncommuting";
    case SweepModel::Critical:
      return "critical";
  }
  return "?";
}

const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::T1:
      return "T1";
    case SweepVariable::T2:
      return "T2";
    case SweepVariable::T:
      return "T";
    case SweepVariable::Dimension:
      return "dimension";
  }
  return "?";
}

SweepModel parse_sweep_model(const std::string& s) {
  if (s == "binary") return SweepModel::Binary;
  if (s == "noncommuting") return SweepModel::Noncommuting;
  if (s == "critical") return SweepModel::Critical;
  throw ValidationError("unknown sweep model \"" + s + "\" (binary, noncommuting, critical)");
}

SweepVariable parse_sweep_variable(const std::string& s) {
  if (s == "T1" || s == "t1") return SweepVariable::T1;
  if (s == "T2" || s == "t2") return SweepVariable::T2;
  if (s == "T" || s == "t") return SweepVariable::T;
  if (s == "dimension" || s == "d") return SweepVariable::Dimension;
  throw ValidationError("unknown sweep variable \"" + s + "\" (T1, T2, T, dimension)");
}

namespace {

using Params = std::map<std::string, double>;

struct Layout {
  std::map<std::string, std::vector<double>> defaults;
  std::set<std::string> optional;
  std::vector<std::string> columns;
};

Layout layout_for(SweepModel model, SweepVariable var) {
  switch (model) {
    case SweepModel::Binary:
      switch (var) {
        case SweepVariable::T1:
          return {{{"t2", {1.0}}, {"alpha", {1.0}}}, {"d"}, {"t1", "t2", "alpha", "p_error"}};
        case SweepVariable::T2:
          return {{{"t1", {1.0}}, {"alpha", {1.0}}}, {"d"}, {"t1", "t2", "alpha", "p_error"}};
        case SweepVariable::T:
          return {{{"dt", {1.0}}, {"alpha", {1.0}}}, {"d"}, {"t", "dt", "t1", "t2", "alpha", "p_error"}};
        default:
          break;
      }
      break;
    case SweepModel::Noncommuting:
      if (var == SweepVariable::T)
        return {{{"b", {0.1, 1.0, 10.0}}, {"angle", {std::numbers::pi / 2}}}, {}, {"t", "b", "angle", "p_error"}};
      break;
    case SweepModel::Critical:
      if (var == SweepVariable::Dimension) return {{{"alpha", {5.0}}}, {}, {"d", "alpha", "t_star"}};
      if (var == SweepVariable::T2)
        return {{{"alpha", {1.0}}, {"d", {2.0}}}, {}, {"t2", "alpha", "d", "q0", "q_inf"}};
      break;
  }
  throw ValidationError(std::string("sweep variable ") + to_string(var) + " is not available for model " +
                        to_string(model));
}

std::map<std::string, std::vector<double>> effective_params(const SweepSpec& spec, const Layout& layout) {
  auto params = layout.defaults;
  for (const auto& [k, v] : spec.fixed) params[k] = v;
  return params;
}

void check_dimension(double d) {
  if (!(d >= 2.0) || d != std::floor(d)) throw ValidationError("dimension parameters must be integers >= 2");
}

std::vector<Params> series_of(const std::map<std::string, std::vector<double>>& params) {
  std::vector<Params> out{Params{}};
  for (const auto& [key, values] : params) {
    std::vector<Params> next;
    for (const auto& partial : out)
      for (double v : values) {
        Params p = partial;
        p[key] = v;
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

SpectralHamiltonian binary_hamiltonian(const Params& p) {
  const auto d = p.find("d");
  if (d != p.end()) return build_lho_hamiltonian(static_cast<int>(d->second), p.at("alpha"));
  return build_qubit_hamiltonian(p.at("alpha"), {0.0, 0.0, 1.0});
}

double binary_error(const SpectralHamiltonian& h, double t1, double t2) {
  const std::vector<ThermalState> states{thermal_state(h, Temperature::kelvin(t1)),
                                         thermal_state(h, Temperature::kelvin(t2))};
  return solve_commuting(DiscriminationProblem::uniform(states)).p_error;
}

std::vector<double> evaluate(const SweepSpec& spec, const Params& p, double x) {
  switch (spec.model) {
    case SweepModel::Binary: {
      const auto h = binary_hamiltonian(p);
      const double alpha = p.at("alpha");
      switch (spec.variable) {
        case SweepVariable::T1:
          return {x, p.at("t2"), alpha, binary_error(h, x, p.at("t2"))};
        case SweepVariable::T2:
          return {p.at("t1"), x, alpha, binary_error(h, p.at("t1"), x)};
        default: {
          const double dt = p.at("dt");
          return {x, dt, x, x + dt, alpha, binary_error(h, x, x + dt)};
        }
      }
    }
    case SweepModel::Noncommuting: {
      const double angle = p.at("angle");
      const Vec3 b1{0.0, 0.0, 1.0};
      const Vec3 b2{std::sin(angle), 0.0, std::cos(angle)};
      return {x, p.at("b"), angle, noncommuting_error(b1, b2, p.at("b"), Temperature::kelvin(x))};
    }
    case SweepModel::Critical: {
      const double alpha = p.at("alpha");
      if (spec.variable == SweepVariable::Dimension) {
        const auto h = build_lho_hamiltonian(static_cast<int>(x), alpha);
        return {x, alpha, critical_temperature(h).value()};
      }
      const auto h = build_lho_hamiltonian(static_cast<int>(p.at("d")), alpha);
      const CriticalQuery q{h, Temperature::kelvin(x)};
      return {x, alpha, p.at("d"), q_zero(q), q_infinity(q)};
    }
  }
  return {};
}

struct Point {
  size_t series;
  double x;
};

struct Plan {
  std::vector<Params> series;
  std::vector<Point> points;
  Layout layout;
};

Plan plan(const SweepSpec& spec) {
  spec.validate();
  Plan pl{{}, {}, layout_for(spec.model, spec.variable)};
  pl.series = series_of(effective_params(spec, pl.layout));
  std::vector<double> xs;
  if (const auto* r = std::get_if<Range>(&spec.grid)) {
    xs = r->values();
  } else {
    for (int d : std::get<std::vector<int>>(spec.grid)) xs.push_back(d);
  }
  for (size_t s = 0; s < pl.series.size(); ++s)
    for (double x : xs) pl.points.push_back({s, x});
  return pl;
}

CsvTable table_header(const SweepSpec& spec, const Plan& pl) {
  return CsvTable{"sweep", spec.to_json(), pl.layout.columns, std::vector<std::vector<double>>(pl.points.size())};
}

}  // namespace

void SweepSpec::validate() const {
  const Layout layout = layout_for(model, variable);
  if (const auto* r = std::get_if<Range>(&grid)) {
    if (variable == SweepVariable::Dimension) throw ValidationError("dimension sweeps take an integer list");
    if (!(r->start < r->stop)) throw ValidationError("sweep range needs start < stop");
    if (r->steps < 2) throw ValidationError("sweep range needs at least 2 steps");
    if (!(r->start >= 0.0)) throw ValidationError("temperatures in a sweep must be nonnegative");
  } else {
    if (variable != SweepVariable::Dimension) throw ValidationError("integer lists are only for dimension sweeps");
    const auto& ds = std::get<std::vector<int>>(grid);
    if (ds.empty()) throw ValidationError("dimension list is empty");
    for (int d : ds) check_dimension(d);
  }
  for (const auto& [k, v] : fixed) {
    if (!layout.defaults.contains(k) && !layout.optional.contains(k))
      throw ValidationError("parameter \"" + k + "\" does not apply to this sweep");
    if (v.empty()) throw ValidationError("parameter \"" + k + "\" has no values");
  }
  for (const auto& [k, values] : effective_params(*this, layout)) {
    for (double v : values) {
      if (k == "d") {
        check_dimension(v);
      } else if (k == "angle") {
        if (!std::isfinite(v)) throw ValidationError("angle must be finite");
      } else if (k == "alpha" || k == "b") {
        if (!(v > 0.0)) throw ValidationError("parameter \"" + k + "\" must be positive");
      } else if (!(v >= 0.0)) {
        throw ValidationError("parameter \"" + k + "\" must be nonnegative");
      }
    }
  }
}

nlohmann::json SweepSpec::to_json() const {
  nlohmann::json j;
  j["model"] = to_string(model);
  j["variable"] = to_string(variable);
  if (const auto* r = std::get_if<Range>(&grid)) {
    j["range"] = {r->start, r->stop, r->steps};
  } else {
    j["values"] = std::get<std::vector<int>>(grid);
  }
  for (const auto& [k, v] : fixed) j["fixed"][k] = v;
  return j;
}

SweepSpec figure_preset(int n) {
  switch (n) {
    case 1: {
      const Range grid{0.1, 5.0, 30};
      return {SweepModel::Binary, SweepVariable::T1, grid, {{"t2", grid.values()}, {"alpha", {1.0}}}};
    }
    case 2:
      return {SweepModel::Binary, SweepVariable::T1, Range{0.01, 10.0, 1000}, {{"t2", {1.0}}, {"alpha", {1.0, 2.0, 5.0}}}};
    case 3:
      return {SweepModel::Binary, SweepVariable::T, Range{0.01, 10.0, 1000}, {{"dt", {0.5, 1.0, 5.0}}, {"alpha", {0.5}}}};
    case 4:
      return {SweepModel::Critical, SweepVariable::Dimension, std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10}, {{"alpha", {5.0}}}};
    case 5:
      return {SweepModel::Noncommuting, SweepVariable::T, Range{0.0, 10.0, 1001},
              {{"b", {0.1, 1.0, 10.0}}, {"angle", {std::numbers::pi / 2}}}};
    default:
      throw ValidationError("figure presets are numbered 1 to 5");
  }
}

CsvTable run_sweep_serial(const SweepSpec& spec) {
  const Plan pl = plan(spec);
  CsvTable t = table_header(spec, pl);
  for (size_t i = 0; i < pl.points.size(); ++i)
    t.rows[i] = evaluate(spec, pl.series[pl.points[i].series], pl.points[i].x);
  return t;
}

CsvTable run_sweep(const SweepSpec& spec) {
  const Plan pl = plan(spec);
  CsvTable t = table_header(spec, pl);
  const auto n = static_cast<std::int64_t>(pl.points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& pt = pl.points[static_cast<size_t>(i)];
    try {
      t.rows[static_cast<size_t>(i)] = evaluate(spec, pl.series[pt.series], pt.x);
    } catch (...) {
#pragma omp critical(thermodiscrim_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

}  // namespace thermodiscrim
