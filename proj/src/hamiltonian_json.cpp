#include "thermodiscrim/hamiltonian_json.hpp"

#include <fstream>
#include <sstream>

namespace thermodiscrim {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("hamiltonian document is missing \"") + key + "\"");
  return doc.at(key);
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw ValidationError(std::string(what) + " must be a number");
  return v.get<double>();
}

Matrix read_real_matrix(const json& rows, Eigen::Index dim, const char* what) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim)
    throw ValidationError(std::string(what) + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) +
                          " nested array");
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw ValidationError(std::string(what) + " has a malformed row");
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = number(row[static_cast<size_t>(j)], what);
  }
  return m;
}

Temperature temperature_from_json(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "infinity") return Temperature::infinite();
    throw ValidationError("temperature string must be \"inf\", got \"" + s + "\"");
  }
  return Temperature::kelvin(number(v, "temperature"));
}

SpectralHamiltonian parse_hamiltonian(const json& doc) {
  if (!doc.is_object()) throw ValidationError("hamiltonian document must be a JSON object");
  const auto type = require(doc, "type").get<std::string>();

  if (type == "qubit") {
    Vec3 dir{0.0, 0.0, 1.0};
    if (doc.contains("direction")) {
      const auto& d = doc.at("direction");
      if (!d.is_array() || d.size() != 3) throw ValidationError("direction must have three components");
      for (size_t k = 0; k < 3; ++k) dir[k] = number(d[k], "direction component");
    }
    return build_qubit_hamiltonian(number(require(doc, "alpha"), "alpha"), dir);
  }
  if (type == "lho") {
    const double e0 = doc.contains("ground_energy") ? number(doc.at("ground_energy"), "ground_energy") : 0.0;
    return build_lho_hamiltonian(require(doc, "d").get<int>(), number(require(doc, "alpha"), "alpha"), e0);
  }
  if (type == "explicit") {
    const auto& e = require(doc, "energies");
    if (!e.is_array() || e.empty()) throw ValidationError("energies must be a nonempty array");
    std::vector<double> energies;
    for (const auto& x : e) energies.push_back(number(x, "energy"));
    if (!doc.contains("projectors")) return SpectralHamiltonian::diagonal(energies);

    const auto& ps = doc.at("projectors");
    if (!ps.is_array() || ps.size() != energies.size())
      throw ValidationError("need exactly one projector per energy");
    const auto dim = static_cast<Eigen::Index>(require(ps[0], "real").size());
    std::vector<HermitianMatrix> projectors;
    for (const auto& p : ps) {
      Matrix m = read_real_matrix(require(p, "real"), dim, "projector real part");
      if (p.contains("imag")) m += Complex(0.0, 1.0) * read_real_matrix(p.at("imag"), dim, "projector imag part");
      projectors.emplace_back(m, kReconstructionTol);
    }
    return SpectralHamiltonian::from_levels(std::move(energies), std::move(projectors));
  }
  throw ValidationError("unknown hamiltonian type \"" + type + "\" (expected qubit, lho or explicit)");
}

}  // namespace

SpectralHamiltonian hamiltonian_from_json(const json& doc) {
  try {
    return parse_hamiltonian(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad hamiltonian document: ") + e.what());
  }
}

ProblemFile problem_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("problem file must be a JSON object");
  if (!doc.contains("hamiltonian")) return ProblemFile{hamiltonian_from_json(doc), {}, {}, std::nullopt};

  ProblemFile p{hamiltonian_from_json(doc.at("hamiltonian")), {}, {}, std::nullopt};
  if (doc.contains("temperatures"))
    for (const auto& t : doc.at("temperatures")) p.temperatures.push_back(temperature_from_json(t));
  if (doc.contains("priors"))
    for (const auto& x : doc.at("priors")) p.priors.push_back(number(x, "prior"));
  if (doc.contains("tc")) p.threshold = temperature_from_json(doc.at("tc"));
  return p;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
  try {
    return problem_from_json(doc);
  } catch (const json::exception& e) {
    throw ValidationError("bad field in " + path.string() + ": " + e.what());
  }
}

}  // namespace thermodiscrim
