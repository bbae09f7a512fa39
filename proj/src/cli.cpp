#include "thermodiscrim/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "thermodiscrim/bloch.hpp"
#include "thermodiscrim/brute_force.hpp"
#include "thermodiscrim/critical.hpp"
#include "thermodiscrim/csv.hpp"
#include "thermodiscrim/discrimination.hpp"
#include "thermodiscrim/hamiltonian_json.hpp"
#include "thermodiscrim/sweep.hpp"
#include "thermodiscrim/threshold.hpp"

namespace thermodiscrim::cli {

namespace {

using nlohmann::json;

// 12 significant digits for human-readable reports.
std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ValidationError("not a number: \"" + raw + "\"");
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

Vec3 parse_vec3(const std::string& s) {
  const auto v = parse_list(s);
  if (v.size() != 3) throw ValidationError("expected three comma-separated components, got \"" + s + "\"");
  return {v[0], v[1], v[2]};
}

Range parse_range(const std::string& s) {
  const char sep = s.find(':') != std::string::npos ? ':' : ',';
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (parts.size() != 3) throw ValidationError("range must be start:stop:steps, got \"" + s + "\"");
  const double steps = parse_number(parts[2]);
  if (steps != std::floor(steps)) throw ValidationError("range steps must be an integer");
  return {parse_number(parts[0]), parse_number(parts[1]), static_cast<int>(steps)};
}

// "2..10" or "2,3,5"
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const double lo = parse_number(s.substr(0, dots));
    const double hi = parse_number(s.substr(dots + 2));
    if (lo != std::floor(lo) || hi != std::floor(hi) || hi < lo)
      throw ValidationError("integer range must look like 2..10");
    for (int d = static_cast<int>(lo); d <= static_cast<int>(hi); ++d) out.push_back(d);
    return out;
  }
  for (double v : parse_list(s)) {
    if (v != std::floor(v)) throw ValidationError("expected integers, got \"" + s + "\"");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<Temperature> to_temperatures(const std::vector<double>& v) {
  std::vector<Temperature> out;
  for (double t : v) out.push_back(Temperature::kelvin(t));
  return out;
}

std::vector<double> temperature_values(const std::vector<Temperature>& ts) {
  std::vector<double> out;
  for (const auto& t : ts) out.push_back(t.value());
  return out;
}

std::optional<double> env_tolerance() {
  const char* s = std::getenv("THERMODISCRIM_TOL");
  if (!s || !*s) return std::nullopt;
  const double v = parse_number(s);
  if (!(v > 0.0)) throw ValidationError("THERMODISCRIM_TOL must be positive");
  return v;
}

// Shared Hamiltonian flags.
struct HamiltonianFlags {
  double alpha = 1.0;
  std::string convention;
  int d = 2;
  std::string file;

  void add_to(CLI::App* app, const std::string& default_convention) {
    convention = default_convention;
    app->add_option("--alpha", alpha, "Energy scale: traceless qubit H = alpha sigma_z, or oscillator spacing");
    app->add_option("--convention", convention, "traceless (qubit, gap 2 alpha) or lho (d levels, gap alpha)")
        ->check(CLI::IsMember({"traceless", "lho"}));
    app->add_option("--d", d, "Dimension for the lho convention");
    app->add_option("--hamiltonian", file, "JSON Hamiltonian or problem file");
  }

  // Describes and builds the Hamiltonian; the problem file wins when given.
  std::pair<SpectralHamiltonian, std::string> build(std::optional<ProblemFile>& problem) const {
    if (!file.empty()) {
      problem = load_problem_file(file);
      return {problem->hamiltonian, "from " + file};
    }
    if (convention == "traceless") {
      if (d != 2) throw ValidationError("the traceless convention is defined for qubits only (use --convention lho)");
      return {build_qubit_hamiltonian(alpha, {0.0, 0.0, 1.0}), "traceless qubit, alpha = " + num(alpha)};
    }
    return {build_lho_hamiltonian(d, alpha), "oscillator d = " + std::to_string(d) + ", spacing alpha = " + num(alpha)};
  }

  json to_json() const {
    json j{{"alpha", alpha}, {"convention", convention}, {"d", d}};
    if (!file.empty()) j["hamiltonian"] = file;
    return j;
  }
};

std::string levels_text(const SpectralHamiltonian& h) {
  std::string s;
  for (int l = 0; l < h.num_levels(); ++l) {
    if (l) s += ", ";
    s += num(h.level(l).energy);
    if (h.level(l).rank > 1) s += " (x" + std::to_string(h.level(l).rank) + ")";
  }
  return s;
}

std::vector<double> resolve_priors(const std::string& flag, const std::optional<ProblemFile>& problem, size_t n) {
  std::vector<double> priors;
  if (!flag.empty()) {
    priors = parse_list(flag);
  } else if (problem && !problem->priors.empty()) {
    priors = problem->priors;
  } else {
    priors.assign(n, 1.0 / static_cast<double>(n));
  }
  if (priors.size() != n) throw ValidationError("need one prior per hypothesis");
  return priors;
}

void print_decisions(std::ostream& out, const DiscriminationProblem& p, const DiscriminationResult& r,
                     const std::vector<std::string>& labels) {
  out << "optimal measurement: energy basis\n";
  for (int l = 0; l < p.num_levels(); ++l) {
    const auto& lvl = p.basis().level(l);
    out << "  level " << l << "  E = " << num(lvl.energy) << "  rank " << lvl.rank << "  joint = (";
    for (int j = 0; j < p.num_hypotheses(); ++j) out << (j ? ", " : "") << num(p.prior(j) * p.weight(j, l));
    const auto& dec = r.decision_map[static_cast<size_t>(l)];
    out << ")  -> " << labels[static_cast<size_t>(dec.hypothesis)] << (dec.tie ? "  (tie: coin toss)" : "") << '\n';
  }
  out << "povm:";
  for (int j = 0; j < p.num_hypotheses(); ++j) {
    out << (j ? ";" : "") << " F[" << labels[static_cast<size_t>(j)] << "] = ";
    std::string terms;
    for (int l = 0; l < p.num_levels(); ++l)
      if (r.decision_map[static_cast<size_t>(l)].hypothesis == j) terms += (terms.empty() ? "" : " + ") + ("Pi_" + std::to_string(l));
    out << (terms.empty() ? "0 (never concluded)" : terms);
  }
  out << '\n';
}

void print_certificate(std::ostream& out, const DiscriminationProblem& p, const DiscriminationResult& r, double tol) {
  const bool ok = verify_certificate(p, r, tol);
  out << "dual certificate: " << (ok ? "verified" : "FAILED") << " (tr K = " << num(r.certificate->trace_value)
      << ", duality gap " << std::abs(r.certificate->trace_value - r.p_success) << ", tol " << tol << ")\n";
  if (!ok) throw ValidationError("dual certificate check failed");
}

CsvTable level_table(const std::string& cmd, const json& params, const DiscriminationProblem& p,
                     const DiscriminationResult& r) {
  CsvTable t{cmd, params, {"level", "energy", "rank"}, {}};
  for (int j = 0; j < p.num_hypotheses(); ++j) t.columns.push_back("joint" + std::to_string(j + 1));
  t.columns.insert(t.columns.end(), {"concluded", "tie", "p_error"});
  for (int l = 0; l < p.num_levels(); ++l) {
    const auto& lvl = p.basis().level(l);
    std::vector<double> row{static_cast<double>(l), lvl.energy, static_cast<double>(lvl.rank)};
    for (int j = 0; j < p.num_hypotheses(); ++j) row.push_back(p.prior(j) * p.weight(j, l));
    const auto& dec = r.decision_map[static_cast<size_t>(l)];
    row.insert(row.end(), {static_cast<double>(dec.hypothesis + 1), dec.tie ? 1.0 : 0.0, r.p_error});
    t.rows.push_back(std::move(row));
  }
  return t;
}

void emit_csv(const std::string& path, const CsvTable& t, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    write_csv(out, t);
  } else {
    write_csv(std::filesystem::path(path), t);
    out << "wrote " << t.rows.size() << " rows to " << path << '\n';
  }
}

// ---------------------------------------------------------------------------

struct BinaryCmd {
  HamiltonianFlags ham;
  std::string t1, t2, priors, out_path;

  int run(std::ostream& out, std::ostream& err, double tol) const {
    std::optional<ProblemFile> problem;
    const auto [h, desc] = ham.build(problem);
    std::vector<Temperature> temps;
    if (!t1.empty() || !t2.empty()) {
      if (t1.empty() || t2.empty()) throw ValidationError("binary needs both --t1 and --t2");
      temps = {Temperature::kelvin(parse_number(t1)), Temperature::kelvin(parse_number(t2))};
    } else if (problem && problem->temperatures.size() == 2) {
      temps = problem->temperatures;
    } else {
      throw ValidationError("binary needs --t1 and --t2 (or two temperatures in the problem file)");
    }
    const auto eta = resolve_priors(priors, problem, 2);

    if (temps[0] == temps[1]) err << "warning: identical states (T1 = T2)\n";

    const std::vector<ThermalState> states{thermal_state(h, temps[0]), thermal_state(h, temps[1])};
    const auto p = DiscriminationProblem::from_states(states, eta);
    const auto r = solve_commuting(p);
    const auto hel = helstrom_binary(p.state(0), p.state(1), eta[0]);

    out << "hamiltonian: " << desc << " (levels " << levels_text(h) << ")\n";
    out << "T1 = " << num(temps[0].value()) << "  T2 = " << num(temps[1].value()) << "  priors = (" << num(eta[0])
        << ", " << num(eta[1]) << ")\n";
    out << "p_error = " << num(r.p_error) << '\n';
    out << "p_success = " << num(r.p_success) << '\n';
    out << "helstrom p_error (trace-norm route) = " << num(hel.p_error) << '\n';
    if (temps[0].is_zero() != temps[1].is_zero()) {
      const Temperature hot = temps[0].is_zero() ? temps[1] : temps[0];
      const auto g = ground_vs_thermal(h, hot.beta());
      out << "p_failure (unambiguous, equal priors) = " << num(g.p_failure) << '\n';
    }
    print_decisions(out, p, r, {"state 1", "state 2"});
    print_certificate(out, p, r, tol);

    json params{{"t1", temps[0].value()}, {"t2", temps[1].value()}, {"priors", eta}, {"hamiltonian", ham.to_json()}};
    emit_csv(out_path, level_table("binary", params, p, r), out);
    return kOk;
  }
};

struct MultiCmd {
  HamiltonianFlags ham;
  std::string temps, priors, out_path;

  int run(std::ostream& out, std::ostream&, double tol) const {
    std::optional<ProblemFile> problem;
    const auto [h, desc] = ham.build(problem);
    std::vector<Temperature> ts;
    if (!temps.empty()) {
      ts = to_temperatures(parse_list(temps));
    } else if (problem) {
      ts = problem->temperatures;
    }
    if (ts.size() < 2) throw ValidationError("multi needs at least two temperatures (--temps a,b,c)");
    const auto eta = resolve_priors(priors, problem, ts.size());

    std::vector<ThermalState> states;
    for (const auto& t : ts) states.push_back(thermal_state(h, t));
    const auto p = DiscriminationProblem::from_states(states, eta);
    const auto r = solve_commuting(p);

    std::vector<std::string> labels;
    for (size_t j = 0; j < ts.size(); ++j) labels.push_back("state " + std::to_string(j + 1));

    out << "hamiltonian: " << desc << " (levels " << levels_text(h) << ")\n";
    out << "temperatures:";
    for (const auto& t : ts) out << ' ' << num(t.value());
    out << "\npriors:";
    for (double e : eta) out << ' ' << num(e);
    out << "\np_error = " << num(r.p_error) << "\np_success = " << num(r.p_success) << '\n';
    print_decisions(out, p, r, labels);
    for (size_t j = 0; j < ts.size(); ++j)
      if (trace_product(r.povm.effects[j], HermitianMatrix::identity(h.dim())) == 0.0)
        out << "state " << j + 1 << " (T = " << num(ts[j].value()) << ") receives the zero effect\n";
    if (brute_force_search_size(p) <= kMaxBruteForceAssignments)
      out << "brute-force p_success = " << num(brute_force_success(p)) << '\n';
    print_certificate(out, p, r, tol);

    json params{{"temps", temperature_values(ts)}, {"priors", eta}, {"hamiltonian", ham.to_json()}};
    emit_csv(out_path, level_table("multi", params, p, r), out);
    return kOk;
  }
};

struct ThresholdCmd {
  HamiltonianFlags ham;
  std::string temps, tc, out_path;

  int run(std::ostream& out, std::ostream&, double tol) const {
    std::optional<ProblemFile> problem;
    const auto [h, desc] = ham.build(problem);
    std::vector<Temperature> ts;
    if (!temps.empty()) {
      ts = to_temperatures(parse_list(temps));
    } else if (problem) {
      ts = problem->temperatures;
    }
    std::optional<Temperature> t_c;
    if (!tc.empty()) {
      t_c = Temperature::kelvin(parse_number(tc));
    } else if (problem) {
      t_c = problem->threshold;
    }
    if (!t_c) throw ValidationError("threshold needs --tc");

    const ThresholdProblem tp{h, ts, *t_c};
    const auto d = decide(tp);
    const auto& red = d.reduction;

    out << "hamiltonian: " << desc << " (levels " << levels_text(h) << ")\n";
    out << "threshold T_c = " << num(t_c->value()) << ": N- = " << red.n_minus << " (q- = " << num(red.q_minus)
        << "), N+ = " << red.n_plus << " (q+ = " << num(red.q_plus) << ")\n";
    for (int l = 0; l < h.num_levels(); ++l) {
      const auto& dec = d.result.decision_map[static_cast<size_t>(l)];
      out << "  level " << l << "  E = " << num(h.level(l).energy) << ": below "
          << num(red.q_minus * red.weights_minus[static_cast<size_t>(l)]) << " vs above "
          << num(red.q_plus * red.weights_plus[static_cast<size_t>(l)]) << "  -> "
          << (d.sides[static_cast<size_t>(l)] == Side::Below ? "BELOW" : "ABOVE") << (dec.tie ? " (tie)" : "") << '\n';
    }
    if (d.trivial()) {
      out << "all outcomes conclude " << (d.sides.front() == Side::Below ? "BELOW" : "ABOVE")
          << "; p_error = " << num(d.result.p_error) << '\n';
    } else {
      out << "p_error = " << num(d.result.p_error) << '\n';
    }
    if (h.dim() == 2 && h.num_levels() == 2) {
      const auto eff = qubit_effective_temperatures(tp);
      out << "effective temperatures: T- = " << num(eff.t_minus.value()) << ", T+ = " << num(eff.t_plus.value())
          << '\n';
    }
    print_certificate(out, reduced_problem(tp), d.result, tol);

    if (!out_path.empty()) {
      CsvTable t{"threshold",
                 {{"temps", temperature_values(ts)}, {"tc", t_c->value()}, {"hamiltonian", ham.to_json()}},
                 {"level", "energy", "joint_below", "joint_above", "concluded_above", "p_error"},
                 {}};
      for (int l = 0; l < h.num_levels(); ++l)
        t.rows.push_back({static_cast<double>(l), h.level(l).energy,
                          red.q_minus * red.weights_minus[static_cast<size_t>(l)],
                          red.q_plus * red.weights_plus[static_cast<size_t>(l)],
                          d.sides[static_cast<size_t>(l)] == Side::Above ? 1.0 : 0.0, d.result.p_error});
      emit_csv(out_path, t, out);
    }
    return kOk;
  }
};

struct CriticalCmd {
  HamiltonianFlags ham;
  std::string bracket, t2, sweep_dim, out_path;

  int run(std::ostream& out, std::ostream&, double tol) const {
    if (!sweep_dim.empty()) {
      SweepSpec spec{SweepModel::Critical, SweepVariable::Dimension, parse_int_list(sweep_dim), {{"alpha", {ham.alpha}}}};
      const auto table = run_sweep(spec);
      out << "critical temperatures, oscillator spacing alpha = " << num(ham.alpha) << '\n';
      for (const auto& row : table.rows) out << "  d = " << row[0] << "  T* = " << num(row[2]) << '\n';
      emit_csv(out_path, table, out);
      return kOk;
    }

    std::optional<ProblemFile> problem;
    const auto [h, desc] = ham.build(problem);
    std::optional<std::pair<double, double>> br;
    if (!bracket.empty()) {
      const auto v = parse_list(bracket);
      if (v.size() != 2) throw ValidationError("--bracket takes lo,hi");
      br = std::pair{v[0], v[1]};
    }
    const Temperature t_star = critical_temperature(h, br, tol);
    const CriticalQuery at_star{h, t_star};

    out << "hamiltonian: " << desc << " (levels " << levels_text(h) << ")\n";
    out << "T* = " << num(t_star.value()) << '\n';
    out << "q0(T*) = " << num(q_zero(at_star)) << "  q_inf(T*) = " << num(q_infinity(at_star)) << '\n';

    CsvTable table{"critical", {{"hamiltonian", ham.to_json()}, {"tol", tol}}, {"t_star"}, {{t_star.value()}}};
    if (!t2.empty()) {
      const Temperature t = Temperature::kelvin(parse_number(t2));
      const CriticalQuery q{h, t};
      const auto cls = classify_best_partner(h, t);
      out << "T2 = " << num(t.value()) << ": q0 = " << num(q_zero(q)) << ", q_inf = " << num(q_infinity(q))
          << " -> " << to_string(cls) << '\n';
      table.columns = {"t_star", "t2", "q0", "q_inf", "best_at_high_t"};
      table.rows = {{t_star.value(), t.value(), q_zero(q), q_infinity(q), cls == BestPartner::BestAtHighT ? 1.0 : 0.0}};
    }
    emit_csv(out_path, table, out);
    return kOk;
  }
};

struct NoncommutingCmd {
  std::string b = "1", dir1 = "0,0,1", dir2 = "1,0,0", t = "1", priors, t_range = "0:10:1001", out_path;
  bool sweep_t = false;

  int run(std::ostream& out, std::ostream&) const {
    const Vec3 b1 = parse_vec3(dir1);
    const Vec3 b2 = parse_vec3(dir2);
    const auto strengths = parse_list(b);

    if (sweep_t) {
      FieldHypothesis{1.0, b1}.validate();
      FieldHypothesis{1.0, b2}.validate();
      const double angle = std::acos(std::clamp(dot(b1, b2), -1.0, 1.0));
      SweepSpec spec{SweepModel::Noncommuting, SweepVariable::T, parse_range(t_range), {{"b", strengths}, {"angle", {angle}}}};
      const auto table = run_sweep(spec);
      out << "noncommuting sweep: b1.b2 = " << num(dot(b1, b2)) << ", " << table.rows.size() << " rows\n";
      if (out_path.empty()) {
        write_csv(out, table);
      } else {
        emit_csv(out_path, table, out);
      }
      return kOk;
    }

    if (strengths.size() != 1) throw ValidationError("--b takes a single value unless --sweep-t is given");
    const auto eta = priors.empty() ? std::vector<double>{0.5, 0.5} : parse_list(priors);
    if (eta.size() != 2) throw ValidationError("--priors takes two values");
    const FieldHypothesis h1{strengths[0], b1, eta[0]};
    const FieldHypothesis h2{strengths[0], b2, eta[1]};
    const Temperature temp = Temperature::kelvin(parse_number(t));
    const auto r = discriminate_fields(h1, h2, temp);

    out << "fields: B = " << num(strengths[0]) << ", b1 = (" << num(b1[0]) << ", " << num(b1[1]) << ", "
        << num(b1[2]) << "), b2 = (" << num(b2[0]) << ", " << num(b2[1]) << ", " << num(b2[2]) << "), T = "
        << num(temp.value()) << '\n';
    out << "p_error = " << num(r.p_error) << '\n';
    if (eta[0] == 0.5 && eta[1] == 0.5)
      out << "closed form p_error = " << num(noncommuting_error(b1, b2, strengths[0], temp)) << '\n';
    try {
      const auto m = optimal_measurement(h1, h2, temp);
      out << "measurement axis m = (" << num(m.axis[0]) << ", " << num(m.axis[1]) << ", " << num(m.axis[2])
          << "): outcome + concludes hypothesis " << m.plus_concludes + 1 << ", outcome - concludes hypothesis "
          << m.minus_concludes + 1 << '\n';
    } catch (const ValidationError& e) {
      out << "measurement axis: undefined (" << e.what() << ")\n";
    }
    if (!out_path.empty()) {
      CsvTable table{"noncommuting",
                     {{"b", strengths[0]}, {"dir1", b1}, {"dir2", b2}, {"t", temp.value()}, {"priors", eta}},
                     {"t", "b", "dot", "p_error"},
                     {{temp.value(), strengths[0], dot(b1, b2), r.p_error}}};
      emit_csv(out_path, table, out);
    }
    return kOk;
  }
};

struct SweepCmd {
  int figure = 0;
  std::string model = "binary", variable = "T1", range, values, out_path;
  std::vector<std::string> params;

  int run(std::ostream& out, std::ostream&) const {
    SweepSpec spec;
    if (figure != 0) {
      spec = figure_preset(figure);
    } else {
      spec.model = parse_sweep_model(model);
      spec.variable = parse_sweep_variable(variable);
      if (!values.empty()) {
        spec.grid = parse_int_list(values);
      } else if (!range.empty()) {
        spec.grid = parse_range(range);
      } else if (spec.variable == SweepVariable::Dimension) {
        spec.grid = std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10};
      }
    }
    for (const auto& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ValidationError("--param takes name=values, got \"" + kv + "\"");
      const std::string key = trim(kv.substr(0, eq));
      const std::string val = kv.substr(eq + 1);
      spec.fixed[key] = val.find(':') != std::string::npos ? parse_range(val).values() : parse_list(val);
    }
    const auto table = run_sweep(spec);
    if (out_path.empty() || out_path == "-") {
      write_csv(out, table);
    } else {
      emit_csv(out_path, table, out);
    }
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-error discrimination of thermal states", "thermodiscrim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "thermodiscrim " + version());

  double tol_flag = 0.0;
  app.add_option("--tol", tol_flag, "Tolerance for root finding and certificate checks (env THERMODISCRIM_TOL)");

  BinaryCmd binary;
  auto* binary_app = app.add_subcommand("binary", "Two thermal states of one Hamiltonian");
  binary.ham.add_to(binary_app, "traceless");
  binary_app->add_option("--t1", binary.t1, "Temperature of state 1 (0 for the ground state)");
  binary_app->add_option("--t2", binary.t2, "Temperature of state 2");
  binary_app->add_option("--priors", binary.priors, "Comma-separated priors (default equal)");
  binary_app->add_option("--out", binary.out_path, "Per-level CSV output ('-' for stdout)");
  binary_app->add_option("--tol", tol_flag, "Certificate tolerance");

  MultiCmd multi;
  auto* multi_app = app.add_subcommand("multi", "N thermal states of one Hamiltonian");
  multi.ham.add_to(multi_app, "traceless");
  multi_app->add_option("--temps", multi.temps, "Comma-separated temperatures");
  multi_app->add_option("--priors", multi.priors, "Comma-separated priors (default uniform)");
  multi_app->add_option("--out", multi.out_path, "Per-level CSV output ('-' for stdout)");
  multi_app->add_option("--tol", tol_flag, "Certificate tolerance");

  ThresholdCmd threshold;
  auto* threshold_app = app.add_subcommand("threshold", "Is the temperature above or below T_c?");
  threshold.ham.add_to(threshold_app, "traceless");
  threshold_app->add_option("--temps", threshold.temps, "Comma-separated, strictly increasing temperatures");
  threshold_app->add_option("--tc", threshold.tc, "Threshold temperature");
  threshold_app->add_option("--out", threshold.out_path, "Per-level CSV output ('-' for stdout)");
  threshold_app->add_option("--tol", tol_flag, "Certificate tolerance");

  CriticalCmd critical;
  auto* critical_app = app.add_subcommand("critical", "Critical temperature where q0 = q_inf");
  critical.ham.add_to(critical_app, "lho");
  critical_app->add_option("--bracket", critical.bracket, "Bisection bracket lo,hi");
  critical_app->add_option("--t2", critical.t2, "Also classify this T2 (BestAtLowT / BestAtHighT / Tie)");
  critical_app->add_option("--sweep-dim", critical.sweep_dim, "Oscillator dimensions, e.g. 2..10");
  critical_app->add_option("--out", critical.out_path, "CSV output ('-' for stdout)");
  critical_app->add_option("--tol", tol_flag, "Root tolerance");

  NoncommutingCmd noncomm;
  auto* noncomm_app = app.add_subcommand("noncommuting", "Qubit fields with different directions, same temperature");
  noncomm_app->add_option("--b", noncomm.b, "Field strength (comma list with --sweep-t)");
  noncomm_app->add_option("--dir1", noncomm.dir1, "Unit field direction of hypothesis 1");
  noncomm_app->add_option("--dir2", noncomm.dir2, "Unit field direction of hypothesis 2");
  noncomm_app->add_option("--t", noncomm.t, "Common temperature");
  noncomm_app->add_option("--priors", noncomm.priors, "Two priors (default equal)");
  noncomm_app->add_flag("--sweep-t", noncomm.sweep_t, "Sweep the temperature (default B = 0.1,1,10)");
  noncomm_app->add_option("--t-range", noncomm.t_range, "Temperature grid start:stop:steps");
  noncomm_app->add_option("--out", noncomm.out_path, "CSV output ('-' for stdout)");

  SweepCmd sweep;
  auto* sweep_app = app.add_subcommand("sweep", "Grid evaluation to CSV (figure data)");
  sweep_app->add_option("--figure", sweep.figure, "Preset for figure 1-5")->check(CLI::Range(1, 5));
  sweep_app->add_option("--model", sweep.model, "binary, noncommuting or critical");
  sweep_app->add_option("--variable", sweep.variable, "T1, T2, T or dimension");
  sweep_app->add_option("--range", sweep.range, "Grid start:stop:steps");
  sweep_app->add_option("--values", sweep.values, "Integer grid for dimension sweeps, e.g. 2..10");
  sweep_app->add_option("--param", sweep.params, "Fixed parameter name=v1,v2 or name=start:stop:steps");
  sweep_app->add_option("--out", sweep.out_path, "CSV output (stdout when omitted)");

  // CLI11 wants argv-style input with the program name first.
  std::vector<std::string> argv_store{"thermodiscrim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  // Only the requested subcommand's prior --tol flag applies; the remaining
  // "Special" parse sentinel (0.0) means "use the environment or default".
  try {
    std::optional<double> tol = tol_flag > 0.0 ? std::optional<double>(tol_flag) : env_tolerance();
    if (binary_app->parsed()) return binary.run(out, err, tol.value_or(kCertificateTol));
    if (multi_app->parsed()) return multi.run(out, err, tol.value_or(kCertificateTol));
    if (threshold_app->parsed()) return threshold.run(out, err, tol.value_or(kCertificateTol));
    if (critical_app->parsed()) return critical.run(out, err, tol.value_or(kCriticalTol));
    if (noncomm_app->parsed()) return noncomm.run(out, err);
    if (sweep_app->parsed()) return sweep.run(out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kUsageError;
}

}  // namespace thermodiscrim::cli
