// Dense complex polynomials: arithmetic, evaluation, companion-matrix roots.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "atto/errors.hpp"

namespace atto {

using cplx = std::complex<double>;

/// Polynomial with complex coefficients stored in ascending degree order.
class Polynomial {
 public:
  Polynomial() : coeffs_{cplx(0.0)} {}

  explicit Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(cplx(0.0));
    strip_exact_zeros();
  }

  Polynomial(std::initializer_list<cplx> coeffs)
      : Polynomial(std::vector<cplx>(coeffs)) {}

  static Polynomial constant(cplx c) { return Polynomial{c}; }

  /// Monic product of (z - r) over the given roots, scaled by `leading`.
  static Polynomial from_roots(const std::vector<cplx>& roots,
                               cplx leading = cplx(1.0)) {
    Polynomial p{leading};
    for (cplx r : roots) p = p * Polynomial{-r, cplx(1.0)};
    return p;
  }

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero(double tol = 0.0) const {
    for (cplx c : coeffs_)
      if (std::abs(c) > tol) return false;
    return true;
  }

  cplx operator()(cplx z) const {
    cplx acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      d[k - 1] = double(k) * coeffs_[k];
    return Polynomial(std::move(d));
  }

  /// Coefficient-wise conjugate p*(z) = sum conj(p_k) z^k.
  Polynomial conjugated() const {
    std::vector<cplx> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = std::conj(coeffs_[k]);
    return Polynomial(std::move(c));
  }

  /// z^m * p(1/z); requires m >= degree().
  Polynomial reversed(int m) const {
    if (m < degree())
      throw InvariantViolation("polynomial reversal order below degree");
    std::vector<cplx> c(static_cast<std::size_t>(m) + 1, cplx(0.0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      c[static_cast<std::size_t>(m) - k] = coeffs_[k];
    return Polynomial(std::move(c));
  }

  /// Drops trailing coefficients below rel_tol * max|coeff|.
  Polynomial trimmed(double rel_tol) const {
    double mx = 0.0;
    for (cplx c : coeffs_) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) return Polynomial{};
    std::vector<cplx> c = coeffs_;
    while (c.size() > 1 && std::abs(c.back()) <= rel_tol * mx) c.pop_back();
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), cplx(0.0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (cplx(-1.0) * b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(cplx s, const Polynomial& p) {
    std::vector<cplx> c = p.coeffs_;
    for (cplx& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& p, cplx s) { return s * p; }

  /// Synthetic division by (z - root); returns quotient and remainder p(root).
  std::pair<Polynomial, cplx> divide_by_root(cplx root) const {
    int n = degree();
    if (n == 0) return {Polynomial{}, coeffs_[0]};
    std::vector<cplx> q(static_cast<std::size_t>(n), cplx(0.0));
    cplx carry = coeffs_.back();
    for (int k = n - 1; k >= 0; --k) {
      q[static_cast<std::size_t>(k)] = carry;
      carry = coeffs_[static_cast<std::size_t>(k)] + root * carry;
    }
    return {Polynomial(std::move(q)), carry};
  }

  Polynomial deflated(cplx root) const { return divide_by_root(root).first; }

  /// All roots of the trimmed polynomial via the Frobenius companion matrix,
  /// each polished by a couple of guarded Newton steps.
  std::vector<cplx> roots() const {
    Polynomial p = trimmed(1e-14);
    int n = p.degree();
    if (n <= 0) return {};
    cplx lead = p.coeffs_.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) companion(i + 1, i) = cplx(1.0);
    for (int i = 0; i < n; ++i)
      companion(i, n - 1) = -p.coeffs_[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    if (es.info() != Eigen::Success)
      throw RootFindingFailure("companion-matrix eigensolve did not converge");
    Polynomial dp = p.derivative();
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      cplx r = es.eigenvalues()(i);
      for (int it = 0; it < 3; ++it) {
        cplx f = p(r), df = dp(r);
        if (std::abs(df) == 0.0) break;
        cplx step = f / df;
        if (std::abs(p(r - step)) < std::abs(f)) r -= step;
        else break;
      }
      out[static_cast<std::size_t>(i)] = r;
    }
    return out;
  }

 private:
  void strip_exact_zeros() {
    while (coeffs_.size() > 1 && coeffs_.back() == cplx(0.0)) coeffs_.pop_back();
  }

  std::vector<cplx> coeffs_;
};

}  // namespace atto
