#include "doctest.h"

#include "support.hpp"
#include "thermodiscrim/brute_force.hpp"
#include "thermodiscrim/discrimination.hpp"

using namespace thermodiscrim;
using namespace thermodiscrim::testing;

namespace {

std::vector<ThermalState> qubit_states(double alpha, std::vector<double> temps) {
  const auto h = build_qubit_hamiltonian(alpha, {0, 0, 1});
  std::vector<ThermalState> out;
  for (double t : temps) out.push_back(thermal_state(h, Temperature::kelvin(t)));
  return out;
}

}  // namespace

TEST_CASE("binary qubit example") {
  const auto states = qubit_states(1.0, {0.5, 1.0});
  const auto p = DiscriminationProblem::uniform(states);
  const auto r = solve_commuting(p);
  CHECK(r.p_error == doctest::Approx(0.449391643969987).epsilon(1e-14));
  CHECK(qubit_binary_closed_form(1.0, 2.0, 1.0) == doctest::Approx(0.449391643969987).epsilon(1e-14));
  CHECK(helstrom_binary(p.state(0), p.state(1), 0.5).p_error == doctest::Approx(0.449391643969987).epsilon(1e-13));
  CHECK(r.decision_map[0].hypothesis == 0);
  CHECK(r.decision_map[1].hypothesis == 1);
  CHECK(verify_certificate(p, r));
  CHECK(r.povm.is_valid());
}

TEST_CASE("closed form at the ends") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(qubit_binary_closed_form(1.0, inf, 1.0) == doctest::Approx(1.0 / (2.0 * (1.0 + std::exp(-2.0)))).epsilon(1e-15));
  CHECK(qubit_binary_closed_form(1.0, 3.0, 3.0) == doctest::Approx(0.5));
  CHECK(qubit_binary_closed_form(1.0, inf, inf) == doctest::Approx(0.5));
  CHECK(qubit_binary_closed_form(2.0, 0.0, inf) == doctest::Approx(0.25));
  CHECK(qubit_binary_closed_form(1.0, 400.0, 0.1) == doctest::Approx(0.5 * (1 - 0.5 * (1 - std::tanh(0.1)))).epsilon(1e-14));
}

TEST_CASE("three qubit temperatures") {
  const auto states = qubit_states(1.0, {0.5, 1.0, 2.0});
  const auto p = DiscriminationProblem::uniform(states);
  const auto r = solve_commuting(p);
  CHECK(r.p_success == doctest::Approx(0.4169850704693012).epsilon(1e-14));
  CHECK(r.p_error == doctest::Approx(0.5830149295306988).epsilon(1e-14));
  CHECK(brute_force_success(p) == doctest::Approx(0.4169850704693012).epsilon(1e-14));
  // the middle temperature is never concluded
  CHECK(r.povm.effects[1].max_abs_diff(HermitianMatrix::zero(2)) == 0.0);
  CHECK(verify_certificate(p, r));
}

TEST_CASE("zero priors and ties") {
  const auto states = qubit_states(1.0, {0.5, 1.0});
  const auto p = DiscriminationProblem::from_states(states, {1.0, 0.0});
  const auto r = solve_commuting(p);
  CHECK(r.p_error == doctest::Approx(0.0).scale(1.0));
  for (const auto& d : r.decision_map) CHECK(d.hypothesis == 0);

  const auto same = qubit_states(1.0, {1.0, 1.0});
  const auto rs = solve_commuting(DiscriminationProblem::uniform(same));
  CHECK(rs.p_error == doctest::Approx(0.5));
  CHECK(rs.decision_map[0].tie);
  CHECK(rs.decision_map[0].hypothesis == 0);
}

TEST_CASE("prior validation") {
  const auto states = qubit_states(1.0, {0.5, 1.0});
  CHECK_THROWS_AS(DiscriminationProblem::from_states(states, {0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(DiscriminationProblem::from_states(states, {1.5, -0.5}), ValidationError);
  CHECK_THROWS_AS(DiscriminationProblem::from_states(states, {1.0}), ValidationError);
  const auto other = thermal_state(build_lho_hamiltonian(2, 1.0), Temperature::kelvin(1.0));
  const std::vector<ThermalState> mixed{states[0], other};
  CHECK_THROWS_AS(DiscriminationProblem::uniform(mixed), ValidationError);
}

TEST_CASE("helstrom input validation") {
  const auto rho = HermitianMatrix::diagonal({0.5, 0.5});
  CHECK_THROWS_AS(helstrom_binary(rho, HermitianMatrix::diagonal({0.7, 0.7}), 0.5), ValidationError);
  CHECK_THROWS_AS(helstrom_binary(rho, HermitianMatrix::diagonal({1.2, -0.2}), 0.5), ValidationError);
  CHECK_THROWS_AS(helstrom_binary(rho, rho, 1.5), ValidationError);
  CHECK_THROWS_AS(helstrom_binary(rho, HermitianMatrix::identity(3) * (1.0 / 3), 0.5), ValidationError);
}

TEST_CASE("ground state against a thermal state") {
  const auto h = build_qubit_hamiltonian(1.0, {0, 0, 1});
  const auto g = ground_vs_thermal(h, 1.0);
  CHECK(g.p_error == doctest::Approx(0.440398538988941).epsilon(1e-14));
  CHECK(g.p_failure == doctest::Approx(0.5 * (1 + 0.440398538988941)).epsilon(1e-14));
}

TEST_CASE("property: commuting solver equals both brute force kernels") {
  Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_commuting_problem(rng, uniform_int(rng, 2, 5), uniform_int(rng, 2, 4));
    const auto r = solve_commuting(p);
    const double bf = brute_force_success(p);
    CHECK(r.p_success == doctest::Approx(bf).epsilon(1e-12).scale(1.0));
    CHECK(brute_force_success_serial(p) == bf);
    CHECK(success_probability(p, r.povm) == doctest::Approx(r.p_success).epsilon(1e-12).scale(1.0));
    CHECK(verify_certificate(p, r));
    CHECK(r.certificate->trace_value == doctest::Approx(r.p_success).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("property: binary commuting solver agrees with the trace norm route") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_commuting_problem(rng, uniform_int(rng, 2, 5), 2);
    const auto hel = helstrom_binary(p.state(0), p.state(1), p.prior(0));
    CHECK(solve_commuting(p).p_error == doctest::Approx(hel.p_error).epsilon(1e-11).scale(1.0));
    CHECK(hel.povm.is_valid());
  }
}

TEST_CASE("certificate check rejects a wrong measurement") {
  const auto states = qubit_states(1.0, {0.5, 1.0});
  const auto p = DiscriminationProblem::uniform(states);
  auto r = solve_commuting(p);
  std::swap(r.povm.effects[0], r.povm.effects[1]);
  CHECK_FALSE(verify_certificate(p, r));
}

TEST_CASE("brute force size limit") {
  const auto h = build_lho_hamiltonian(12, 1.0);
  std::vector<ThermalState> states;
  for (double t : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) states.push_back(thermal_state(h, Temperature::kelvin(t)));
  const auto p = DiscriminationProblem::uniform(states);
  CHECK(brute_force_search_size(p) > kMaxBruteForceAssignments);
  CHECK_THROWS_AS(brute_force_success(p), ValidationError);
}
