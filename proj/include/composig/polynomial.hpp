#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <initializer_list>
#include <vector>

#include "composig/errors.hpp"

namespace composig {

using Complex = std::complex<double>;

/// Dense polynomial with coefficients in ascending degree order.
///
/// The zero polynomial is stored as the single coefficient 0. Trailing
/// coefficients smaller than 1e-13 times the largest coefficient magnitude
/// are trimmed, so degree() reflects the numerically meaningful degree.
template <typename Scalar>
class PolynomialT {
 public:
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  static constexpr double kTrimRel = 1e-13;

  PolynomialT() : coeffs_(Vector::Zero(1)) {}

  explicit PolynomialT(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  PolynomialT(std::initializer_list<Scalar> coeffs)
      : coeffs_(Eigen::Map<const Vector>(coeffs.begin(),
                                         static_cast<Eigen::Index>(coeffs.size()))) {
    trim();
  }

  const Vector& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Scalar(0); }
  Scalar leading() const { return coeffs_[coeffs_.size() - 1]; }
  double max_abs_coeff() const { return coeffs_.cwiseAbs().maxCoeff(); }

  /// Horner evaluation at a complex point.
  Complex operator()(Complex x) const {
    Complex acc(0.0);
    for (Eigen::Index i = coeffs_.size() - 1; i >= 0; --i) acc = acc * x + Complex(coeffs_[i]);
    return acc;
  }

  PolynomialT derivative() const {
    if (degree() == 0) return PolynomialT();
    Vector d(coeffs_.size() - 1);
    for (Eigen::Index i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return PolynomialT(std::move(d));
  }

  /// p(-x): negates the odd coefficients.
  PolynomialT with_negated_argument() const {
    Vector c = coeffs_;
    for (Eigen::Index i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator+(const PolynomialT& a, const PolynomialT& b) {
    Vector c = Vector::Zero(std::max(a.coeffs_.size(), b.coeffs_.size()));
    c.head(a.coeffs_.size()) += a.coeffs_;
    c.head(b.coeffs_.size()) += b.coeffs_;
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator-(const PolynomialT& a, const PolynomialT& b) {
    Vector c = Vector::Zero(std::max(a.coeffs_.size(), b.coeffs_.size()));
    c.head(a.coeffs_.size()) += a.coeffs_;
    c.head(b.coeffs_.size()) -= b.coeffs_;
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialT();
    Vector c = Vector::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i)
      for (Eigen::Index j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolynomialT(std::move(c));
  }

  friend PolynomialT operator*(Scalar s, const PolynomialT& p) {
    return PolynomialT(Vector(s * p.coeffs_));
  }

 private:
  void trim() {
    if (coeffs_.size() == 0) {
      coeffs_ = Vector::Zero(1);
      return;
    }
    const double scale = coeffs_.cwiseAbs().maxCoeff();
    if (scale == 0.0) {
      coeffs_ = Vector::Zero(1);
      return;
    }
    Eigen::Index last = coeffs_.size() - 1;
    using std::abs;
    while (last > 0 && abs(coeffs_[last]) < kTrimRel * scale) --last;
    if (last + 1 != coeffs_.size()) coeffs_ = coeffs_.head(last + 1).eval();
  }

  Vector coeffs_;
};

using Polynomial = PolynomialT<double>;
using ComplexPolynomial = PolynomialT<Complex>;

inline ComplexPolynomial to_complex(const Polynomial& p) {
  return ComplexPolynomial(p.coeffs().cast<Complex>().eval());
}

/// Roots via companion-matrix eigenvalues with one Newton polish step.
/// A root is accepted when |p(root)| < 1e-10 times the largest coefficient.
template <typename Scalar>
std::vector<Complex> roots(const PolynomialT<Scalar>& p) {
  const int n = p.degree();
  if (n < 1 || p.is_zero()) return {};

  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix companion = Matrix::Zero(n, n);
  const Scalar lead = p.leading();
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) companion(i + 1, i) = Scalar(1);
    companion(i, n - 1) = -p.coeffs()[i] / lead;
  }

  Eigen::VectorXcd eigs;
  if constexpr (std::is_same_v<Scalar, double>) {
    Eigen::EigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    eigs = solver.eigenvalues();
  } else {
    Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    eigs = solver.eigenvalues();
  }

  const auto dp = p.derivative();
  const double accept = 1e-10 * p.max_abs_coeff();
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    Complex r = eigs[i];
    const Complex d = dp(r);
    if (std::abs(d) > 0.0) {
      const Complex step = p(r) / d;
      if (std::abs(step) < 1.0 + std::abs(r)) r -= step;  // skip wild steps at multiple roots
    }
    if (std::abs(p(r)) > accept && std::abs(p(eigs[i])) > accept)
      throw RootSolveFailure("polynomial root did not converge");
    out.push_back(std::abs(p(r)) <= std::abs(p(eigs[i])) ? r : Complex(eigs[i]));
  }
  return out;
}

}  // namespace composig
