#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thermodiscrim/thermal.hpp"

namespace thermodiscrim {

// Hamiltonian documents:
//   {"type": "qubit", "alpha": 1, "direction": [0, 0, 1]}
//   {"type": "lho", "d": 3, "alpha": 1, "ground_energy": 0}
//   {"type": "explicit", "energies": [...]}                     diagonal
//   {"type": "explicit", "energies": [...], "projectors": [
//        {"real": [[...]], "imag": [[...]]}, ...]}               one per energy
// "imag" may be omitted for real projectors.
SpectralHamiltonian hamiltonian_from_json(const nlohmann::json& doc);

// Problem files wrap a Hamiltonian with hypothesis data:
//   {"hamiltonian": {...}, "temperatures": [0.5, 1, "inf"],
//    "priors": [...], "tc": 0.7}
// A bare Hamiltonian document is accepted as a problem file with no
// temperatures. Temperatures may be numbers or the string "inf".
struct ProblemFile {
  SpectralHamiltonian hamiltonian;
  std::vector<Temperature> temperatures;
  std::vector<double> priors;
  std::optional<Temperature> threshold;
};

ProblemFile problem_from_json(const nlohmann::json& doc);
ProblemFile load_problem_file(const std::filesystem::path& path);

}  // namespace thermodiscrim
