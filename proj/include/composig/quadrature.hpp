#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "composig/errors.hpp"
#include "composig/polynomial.hpp"

namespace composig {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Nodes and weights by Golub-Welsch: eigen-decomposition of the Jacobi matrix.
QuadratureRule gauss_legendre(int n);

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int nodes_per_panel = 16;
  int max_panels = 1 << 14;
};

/// Adaptive composite Gauss-Legendre on [a, b]: all panels are bisected until
/// two successive refinements agree to rel_tol (floor abs_tol).
template <typename F>
Complex integrate_adaptive(F&& f, double a = 0.0, double b = 1.0,
                           const QuadratureOptions& opts = {}) {
  static const QuadratureRule rule16 = gauss_legendre(16);
  const QuadratureRule rule =
      (opts.nodes_per_panel == 16) ? rule16 : gauss_legendre(opts.nodes_per_panel);

  auto composite = [&](int panels) {
    Complex sum(0.0);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      const double mid = lo + 0.5 * h;
      for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    return 0.5 * h * sum;
  };

  Complex prev = composite(4);
  for (int panels = 8; panels <= opts.max_panels; panels *= 2) {
    const Complex cur = composite(panels);
    const double diff = std::abs(cur - prev);
    const bool finite = std::isfinite(cur.real()) && std::isfinite(cur.imag());
    if (finite && diff <= std::max(opts.rel_tol * std::abs(cur), opts.abs_tol)) return cur;
    prev = cur;
  }
  throw QuadratureNotConverged("composite Gauss-Legendre did not converge within the panel cap");
}

}  // namespace composig
