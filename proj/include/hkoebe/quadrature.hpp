#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "hkoebe/errors.hpp"

namespace hkoebe {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Nodes from the eigenvalues of the symmetric Jacobi matrix (Golub-Welsch),
/// then polished with Newton steps on P_n so nodes and weights sit at full
/// double precision even for n in the hundreds.
inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  GaussLegendreRule rule{solver.eigenvalues(), Eigen::VectorXd(n)};

  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    double dp = 1.0;
    for (int it = 0; it < 3; ++it) {
      // three-term recurrence for P_n(x) and P_n'(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pn = n == 1 ? x : p1;
      const double pm = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pm) / (x * x - 1.0);
      x -= pn / dp;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

namespace detail {

template <typename T, typename F>
T simpson_step(F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step<T>(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step<T>(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance `tol`.
/// Works for real- and complex-valued integrands.
template <typename F>
auto adaptive_simpson(F f, double a, double b, double tol = 1e-10, int max_depth = 40) {
  using T = decltype(f(a));
  const T fa = f(a);
  const T fb = f(b);
  const T fm = f(0.5 * (a + b));
  const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step<T>(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace hkoebe
