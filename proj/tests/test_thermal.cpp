#include "doctest.h"

#include "support.hpp"
#include "thermodiscrim/hamiltonian_json.hpp"
#include "thermodiscrim/thermal.hpp"

using namespace thermodiscrim;
using namespace thermodiscrim::testing;

TEST_CASE("temperature ends are exact") {
  CHECK(Temperature::zero().beta() == std::numeric_limits<double>::infinity());
  CHECK(Temperature::infinite().beta() == 0.0);
  CHECK(Temperature::from_beta(0.0).is_infinite());
  CHECK(Temperature::from_beta(std::numeric_limits<double>::infinity()).is_zero());
  CHECK(Temperature::kelvin(4.0).beta() == 0.25);
  CHECK_THROWS_AS(Temperature::kelvin(-1.0), ValidationError);
  CHECK_THROWS_AS(Temperature::kelvin(std::nan("")), ValidationError);
  CHECK(Temperature::kelvin(1.0) < Temperature::kelvin(2.0));
}

TEST_CASE("qubit thermal weights") {
  const auto h = build_qubit_hamiltonian(1.0, {0, 0, 1});
  const auto s = thermal_state(h, Temperature::kelvin(1.0));
  CHECK(s.weights[0] == doctest::Approx(0.880797077977882).epsilon(1e-14));
  CHECK(s.weights[1] == doctest::Approx(1 - 0.880797077977882).epsilon(1e-13));
  // ground level of alpha sigma_z is |1>
  const auto rho = to_matrix(s);
  CHECK(rho(1, 1).real() == doctest::Approx(0.880797077977882).epsilon(1e-14));
}

TEST_CASE("oscillator weights and partition function") {
  const auto h = build_lho_hamiltonian(3, 1.0);
  const auto s = thermal_state(h, Temperature::kelvin(0.5));
  CHECK(s.weights[0] == doctest::Approx(0.866813332197335).epsilon(1e-14));
  CHECK(s.weights[1] == doctest::Approx(0.117310427826198).epsilon(1e-14));
  CHECK(s.weights[2] == doctest::Approx(0.0158762399764668).epsilon(1e-13));
  CHECK(thermal_state(h, Temperature::kelvin(1.0)).partition_value == doctest::Approx(1.503214724408055).epsilon(1e-14));
}

TEST_CASE("zero and infinite temperature") {
  const auto h = SpectralHamiltonian::diagonal(std::vector<double>{0.0, 0.0, 1.0, 5.0});
  const auto cold = thermal_state(h, Temperature::zero());
  CHECK(cold.weights == std::vector<double>{1.0, 0.0, 0.0});
  const auto hot = thermal_state(h, Temperature::infinite());
  CHECK(hot.weights[0] == doctest::Approx(0.5));
  CHECK(hot.weights[1] == doctest::Approx(0.25));
  CHECK(hot.weights[2] == doctest::Approx(0.25));
}

TEST_CASE("huge energies do not overflow") {
  const auto h = SpectralHamiltonian::diagonal(std::vector<double>{1e6, 1e6 + 1.0});
  const auto s = thermal_state(h, Temperature::kelvin(1e-3));
  CHECK(s.weights[0] == 1.0);
  CHECK(s.weights[1] == 0.0);
  CHECK(std::isfinite(s.partition_value));
}

TEST_CASE("from_levels validation") {
  const auto p0 = HermitianMatrix::diagonal({1.0, 0.0});
  const auto p1 = HermitianMatrix::diagonal({0.0, 1.0});
  CHECK_NOTHROW(SpectralHamiltonian::from_levels({2.0, 1.0}, {p0, p1}));
  CHECK(SpectralHamiltonian::from_levels({2.0, 1.0}, {p0, p1}).level(0).energy == 1.0);
  CHECK_THROWS_AS(SpectralHamiltonian::from_levels({1.0}, {p0}), ValidationError);
  CHECK_THROWS_AS(SpectralHamiltonian::from_levels({1.0, 2.0}, {p0, p0}), ValidationError);
  CHECK_THROWS_AS(SpectralHamiltonian::from_levels({1.0, 2.0}, {p0 * 0.5, p1}), ValidationError);
  const auto merged = SpectralHamiltonian::from_levels({1.0, 1.0}, {p0, p1});
  CHECK(merged.num_levels() == 1);
  CHECK(merged.level(0).rank == 2);
}

TEST_CASE("from_matrix recovers the spectral form") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = uniform_int(rng, 2, 5);
    const auto h = random_hamiltonian(rng, d);
    const auto back = SpectralHamiltonian::from_matrix(h.to_matrix());
    CHECK(back.same_as(h, 1e-9));
  }
}

TEST_CASE("property: weights are a distribution, monotone in temperature") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_hamiltonian(rng, uniform_int(rng, 2, 5));
    const double t1 = uniform(rng, 0.01, 5), t2 = t1 + uniform(rng, 0.01, 5);
    const auto s1 = thermal_state(h, Temperature::kelvin(t1));
    const auto s2 = thermal_state(h, Temperature::kelvin(t2));
    double sum = 0;
    for (double w : s1.weights) {
      CHECK(w >= 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(to_matrix(s1).trace() == doctest::Approx(1.0).epsilon(1e-12));
    // ground occupation decreases when heating
    CHECK(s2.weights[0] <= s1.weights[0] + 1e-15);
  }
}

TEST_CASE("property: shift invariance of thermal states") {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = random_hamiltonian(rng, uniform_int(rng, 2, 5));
    const double x = uniform(rng, -10, 10);
    const auto t = Temperature::kelvin(uniform(rng, 0.05, 5));
    const auto a = to_matrix(thermal_state(h, t));
    const auto b = to_matrix(thermal_state(h.shifted(x), t));
    CHECK(a.max_abs_diff(b) <= 1e-12);
  }
}

TEST_CASE("qubit hamiltonian along an arbitrary axis") {
  const Vec3 n{0.6, 0.0, 0.8};
  const auto h = build_qubit_hamiltonian(2.0, n);
  CHECK(h.to_matrix().max_abs_diff(pauli_dot(n) * 2.0) <= 1e-14);
  CHECK_THROWS_AS(build_qubit_hamiltonian(1.0, {1.0, 1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(build_qubit_hamiltonian(0.0, {0.0, 0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(build_lho_hamiltonian(1, 1.0), ValidationError);
}

TEST_CASE("hamiltonian json documents") {
  using nlohmann::json;
  CHECK(hamiltonian_from_json(json{{"type", "qubit"}, {"alpha", 1.0}, {"direction", {0, 0, 1}}})
            .same_as(build_qubit_hamiltonian(1.0, {0, 0, 1})));
  CHECK(hamiltonian_from_json(json{{"type", "lho"}, {"d", 4}, {"alpha", 0.5}}).same_as(build_lho_hamiltonian(4, 0.5)));
  const auto ex = hamiltonian_from_json(json::parse(R"({"type":"explicit","energies":[0,1],
      "projectors":[{"real":[[0.5,0.5],[0.5,0.5]]},{"real":[[0.5,-0.5],[-0.5,0.5]]}]})"));
  CHECK(ex.to_matrix()(0, 1).real() == doctest::Approx(-0.5));
  CHECK_THROWS_AS(hamiltonian_from_json(json{{"type", "spin"}}), ValidationError);
  CHECK_THROWS_AS(hamiltonian_from_json(json{{"type", "lho"}, {"d", "three"}}), ValidationError);
  CHECK_THROWS_AS(hamiltonian_from_json(json::parse(R"({"type":"explicit","energies":[0,1],
      "projectors":[{"real":[[1,0],[0,0]]},{"real":[[1,0],[0,0]]}]})")),
                  ValidationError);

  const auto pf = problem_from_json(json::parse(
      R"({"hamiltonian":{"type":"qubit","alpha":1},"temperatures":[0,1,"inf"],"priors":[0.2,0.3,0.5],"tc":0.5})"));
  REQUIRE(pf.temperatures.size() == 3);
  CHECK(pf.temperatures[2].is_infinite());
  CHECK(pf.threshold->value() == 0.5);
  CHECK(pf.priors[2] == 0.5);
}
