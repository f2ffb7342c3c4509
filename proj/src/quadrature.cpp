#include "composig/quadrature.hpp"

namespace composig {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw ValidationError("quadrature order must be positive");
  if (n == 1) return {Eigen::VectorXd::Zero(1), Eigen::VectorXd::Constant(1, 2.0)};

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  QuadratureRule rule;
  rule.nodes = solver.eigenvalues();
  rule.weights = 2.0 * solver.eigenvectors().row(0).array().square();
  return rule;
}

}  // namespace composig
