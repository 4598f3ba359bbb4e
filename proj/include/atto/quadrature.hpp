// Trapezoidal means over the unit circle with node doubling.
//
// Every integrand in this library extends to a Laurent series on an annulus
// around the circle, so the trapezoidal rule converges geometrically; the
// doubling loop stops once two consecutive estimates agree entrywise.
#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "atto/errors.hpp"

namespace atto {

struct QuadratureOptions {
  int initial_nodes = 256;
  int max_nodes = 16384;
  double tol = 1e-12;  // max-abs entry agreement between doublings
};

/// Mean over |z|=1 of a matrix-valued integrand f(z) with fixed shape
/// rows x cols.  Node schedule is fixed by the options, so results are
/// deterministic for fixed inputs.
template <class F>
Eigen::MatrixXcd circle_mean_matrix(int rows, int cols, F&& f,
                                    const QuadratureOptions& opt = {}) {
  using Eigen::MatrixXcd;
  int n = opt.initial_nodes;
  MatrixXcd total = MatrixXcd::Zero(rows, cols);
  for (int k = 0; k < n; ++k)
    total += f(std::polar(1.0, 2.0 * M_PI * k / n));
  MatrixXcd estimate = total / double(n);
  while (2 * n <= opt.max_nodes) {
    // New nodes are the odd 2n-th roots of unity; previous sums are reused.
    MatrixXcd odd = MatrixXcd::Zero(rows, cols);
    for (int k = 0; k < n; ++k)
      odd += f(std::polar(1.0, M_PI * (2.0 * k + 1.0) / n));
    total += odd;
    n *= 2;
    MatrixXcd refined = total / double(n);
    double diff = (refined - estimate).cwiseAbs().maxCoeff();
    estimate = refined;
    if (diff < opt.tol) return estimate;
  }
  throw QuadratureNotConverged("circle quadrature not converged at " +
                               std::to_string(n) + " nodes");
}

/// Scalar convenience wrapper.
template <class F>
cplx circle_mean(F&& f, const QuadratureOptions& opt = {}) {
  auto wrap = [&f](cplx z) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = f(z);
    return m;
  };
  return circle_mean_matrix(1, 1, wrap, opt)(0, 0);
}

}  // namespace atto
