#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace thermodiscrim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Module tolerances. Operations taking an explicit tol override these.
inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kReconstructionTol = 1e-10;

// Thrown for any input that violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense d x d complex matrix equal to its own adjoint.
//
// Construction checks |m(i,j) - conj(m(j,i))| <= tol entrywise and then stores
// the exactly symmetrized (m + m^dagger)/2, so downstream code can rely on
// exact hermiticity.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m, double tol = kHermiticityTol);

  static HermitianMatrix zero(int dim);
  static HermitianMatrix identity(int dim);
  static HermitianMatrix diagonal(const std::vector<double>& diag);
  // |v><v|
  static HermitianMatrix outer(const Vector& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;
  HermitianMatrix& operator+=(const HermitianMatrix& o);

  // U m U^dagger
  HermitianMatrix conjugated(const Matrix& unitary) const;

  double max_abs_diff(const HermitianMatrix& o) const;

 private:
  struct Unchecked {};
  HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

inline HermitianMatrix operator*(double s, const HermitianMatrix& m) { return m * s; }

// tr(a b) for Hermitian a, b; always real.
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // nondecreasing
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]

  HermitianMatrix reconstruct() const;
  // Sum of |v_k><v_k| over k with eigenvalues[k] >= threshold.
  HermitianMatrix spectral_projector(double threshold) const;
};

// Cyclic complex Jacobi. Eigenvectors inside a degenerate cluster only span
// the eigenspace; callers must not rely on a particular basis there.
EigenDecomposition eigendecompose(const HermitianMatrix& m);
// Validates hermiticity first; throws ValidationError with the offending entry.
EigenDecomposition eigendecompose(const Matrix& m, double tol = kHermiticityTol);

double trace_norm(const HermitianMatrix& m);
double min_eigenvalue(const HermitianMatrix& m);
bool is_psd(const HermitianMatrix& m, double tol);

}  // namespace thermodiscrim
