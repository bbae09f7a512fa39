#include "thermodiscrim/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace thermodiscrim {

HermitianMatrix::HermitianMatrix(const Matrix& m, double tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << "Hermitian matrix must be square with dim >= 1, got " << m.rows() << "x" << m.cols();
    throw ValidationError(os.str());
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      double dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (!(dev <= tol)) {
        std::ostringstream os;
        os << "matrix is not Hermitian: |m(" << i << "," << j << ") - conj(m(" << j << "," << i
           << "))| = " << dev << " exceeds " << tol;
        throw ValidationError(os.str());
      }
    }
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(Matrix::Zero(dim, dim), Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(Matrix::Identity(dim, dim), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag[static_cast<size_t>(i)];
  return HermitianMatrix(std::move(m), Unchecked{});
}

HermitianMatrix HermitianMatrix::outer(const Vector& v) {
  Matrix m = v * v.adjoint();
  return HermitianMatrix(0.5 * (m + m.adjoint()), Unchecked{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  return HermitianMatrix(m_ + o.m_, Unchecked{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  return HermitianMatrix(m_ - o.m_, Unchecked{});
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
  return HermitianMatrix(m_ * s, Unchecked{});
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  m_ += o.m_;
  return *this;
}

HermitianMatrix HermitianMatrix::conjugated(const Matrix& unitary) const {
  Matrix r = unitary * m_ * unitary.adjoint();
  return HermitianMatrix(0.5 * (r + r.adjoint()), Unchecked{});
}

double HermitianMatrix::max_abs_diff(const HermitianMatrix& o) const {
  return (m_ - o.m_).cwiseAbs().maxCoeff();
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  // tr(ab) = sum_ij a_ij b_ji
  return (a.matrix().transpose().cwiseProduct(b.matrix())).sum().real();
}

HermitianMatrix EigenDecomposition::reconstruct() const {
  const auto n = eigenvectors.rows();
  Eigen::VectorXd lambda(n);
  for (Eigen::Index k = 0; k < n; ++k) lambda(k) = eigenvalues[static_cast<size_t>(k)];
  Matrix r = eigenvectors * lambda.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  return HermitianMatrix(0.5 * (r + r.adjoint()), 1e300);
}

HermitianMatrix EigenDecomposition::spectral_projector(double threshold) const {
  const auto n = static_cast<int>(eigenvectors.rows());
  HermitianMatrix p = HermitianMatrix::zero(n);
  for (int k = 0; k < n; ++k) {
    if (eigenvalues[static_cast<size_t>(k)] >= threshold) p += HermitianMatrix::outer(eigenvectors.col(k));
  }
  return p;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenDecomposition eigendecompose(const HermitianMatrix& m) {
  const Eigen::Index n = m.dim();
  Matrix a = m.matrix();
  Matrix v = Matrix::Identity(n, n);

  const double scale = std::max(a.norm(), std::numeric_limits<double>::min());
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-300) continue;
        // Phase e^{-i phi} on column q makes a(p,q) real, then a real
        // symmetric rotation annihilates it.
        const Complex phase = std::conj(a(p, q)) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * phase;
        const Complex uqq = c * phase;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.reserve(static_cast<size_t>(n));
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<size_t>(k)];
    out.eigenvalues.push_back(a(src, src).real());
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

EigenDecomposition eigendecompose(const Matrix& m, double tol) {
  return eigendecompose(HermitianMatrix(m, tol));
}

double trace_norm(const HermitianMatrix& m) {
  const auto ed = eigendecompose(m);
  double s = 0.0;
  for (double l : ed.eigenvalues) s += std::abs(l);
  return s;
}

double min_eigenvalue(const HermitianMatrix& m) { return eigendecompose(m).eigenvalues.front(); }

bool is_psd(const HermitianMatrix& m, double tol) {
  if (tol < 0) throw ValidationError("is_psd: tolerance must be nonnegative");
  return min_eigenvalue(m) >= -tol;
}

}  // namespace thermodiscrim
