// Quadrature-free certification path: truncated Fourier/Taylor arithmetic
// for projections and operator matrices, built from geometric-series
// recurrences on rational functions.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "atto/rational.hpp"
#include "atto/tto.hpp"

namespace atto {

inline constexpr double kOracleTailTol = 1e-12;
inline constexpr double kOraclePoleMargin = 1e-3;

/// Fourier coefficients c_n for n in [-M, M].
class FourierSlice {
 public:
  explicit FourierSlice(int order)
      : order_(order), c_(static_cast<std::size_t>(2 * order + 1), cplx(0.0)) {}

  int order() const { return order_; }

  cplx at(int n) const {
    return (n < -order_ || n > order_)
               ? cplx(0.0)
               : c_[static_cast<std::size_t>(n + order_)];
  }

  void set(int n, cplx v) { c_[static_cast<std::size_t>(n + order_)] = v; }
  void add(int n, cplx v) { c_[static_cast<std::size_t>(n + order_)] += v; }

  double norm() const {
    double s = 0.0;
    for (cplx v : c_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// max(|c_{+-M}|, |c_{+-(M-1)}|): the geometric-tail estimate.
  double tail() const {
    return std::max(std::max(std::abs(at(order_)), std::abs(at(order_ - 1))),
                    std::max(std::abs(at(-order_)), std::abs(at(-order_ + 1))));
  }

  void require_tail(const char* what) const {
    if (tail() >= kOracleTailTol)
      throw TruncationInsufficient(std::string(what) + ": tail " +
                                   sci(tail()) + " at order " +
                                   std::to_string(order_));
  }

 private:
  int order_;
  std::vector<cplx> c_;
};

namespace detail {

inline void require_pole_margin(const RationalAnalytic& r, const char* what) {
  for (cplx p : r.den().roots())
    if (std::abs(p) < 1.0 + kOraclePoleMargin)
      throw TruncationInsufficient(std::string(what) +
                                   ": pole within 1e-3 of the circle");
}

/// Maclaurin coefficients 0..M of num/den by the division recurrence;
/// den(0) = 1 is guaranteed by RationalAnalytic.
inline std::vector<cplx> taylor(const RationalAnalytic& r, int order) {
  const auto& p = r.num().coeffs();
  const auto& q = r.den().coeffs();
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx(0.0));
  for (int n = 0; n <= order; ++n) {
    cplx acc = (n < static_cast<int>(p.size())) ? p[static_cast<std::size_t>(n)]
                                                : cplx(0.0);
    int kmax = std::min<int>(n, static_cast<int>(q.size()) - 1);
    for (int k = 1; k <= kmax; ++k)
      acc -= q[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n - k)];
    c[static_cast<std::size_t>(n)] = acc;
  }
  return c;
}

}  // namespace detail

/// Slice of an analytic rational function: Taylor coefficients at n >= 0.
inline FourierSlice fourier_of(const RationalAnalytic& r, int order) {
  detail::require_pole_margin(r, "fourier_of");
  FourierSlice s(order);
  auto c = detail::taylor(r, order);
  for (int n = 0; n <= order; ++n) s.set(n, c[static_cast<std::size_t>(n)]);
  s.require_tail("fourier_of");
  return s;
}

/// Slice of a boundary symbol g_plus + conj(g_minus): the conjugated part
/// lands on negative indices.
inline FourierSlice fourier_of(const Symbol& sym, int order) {
  detail::require_pole_margin(sym.g_plus(), "fourier_of");
  detail::require_pole_margin(sym.g_minus(), "fourier_of");
  FourierSlice s(order);
  auto cp = detail::taylor(sym.g_plus(), order);
  auto cm = detail::taylor(sym.g_minus(), order);
  for (int n = 0; n <= order; ++n) s.set(n, cp[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= order; ++n)
    s.add(-n, std::conj(cm[static_cast<std::size_t>(n)]));
  s.require_tail("fourier_of");
  return s;
}

/// Szego projection: negative-index coefficients vanish.
inline FourierSlice szego_project(const FourierSlice& s) {
  FourierSlice out(s.order());
  for (int n = 0; n <= s.order(); ++n) out.set(n, s.at(n));
  return out;
}

/// Coefficient mirror of the conjugate boundary function.
inline FourierSlice conjugate_slice(const FourierSlice& s) {
  FourierSlice out(s.order());
  for (int n = -s.order(); n <= s.order(); ++n)
    out.set(-n, std::conj(s.at(n)));
  return out;
}

/// Product on the circle = coefficient convolution, truncated to the order.
inline FourierSlice convolve(const FourierSlice& a, const FourierSlice& b) {
  const int m = a.order();
  if (b.order() != m)
    throw TruncationInsufficient("convolution of mismatched orders");
  FourierSlice out(m);
  for (int n = -m; n <= m; ++n) {
    cplx acc(0.0);
    int lo = std::max(-m, n - m), hi = std::min(m, n + m);
    for (int k = lo; k <= hi; ++k) acc += a.at(k) * b.at(n - k);
    out.set(n, acc);
  }
  return out;
}

/// P_alpha g = h - alpha P(conj(alpha) h) with h = P g, entirely in
/// coefficients.
inline FourierSlice model_project(const BlaschkeProduct& alpha,
                                  const FourierSlice& s) {
  RationalAnalytic ar = to_rational(alpha);
  detail::require_pole_margin(ar, "model_project");
  FourierSlice aslice = fourier_of(ar, s.order());
  FourierSlice h = szego_project(s);
  FourierSlice inner = szego_project(convolve(conjugate_slice(aslice), h));
  FourierSlice correction = convolve(aslice, inner);
  FourierSlice out(s.order());
  for (int n = -s.order(); n <= s.order(); ++n)
    out.set(n, h.at(n) - correction.at(n));
  return out;
}

namespace detail {

/// Takenaka-Malmquist function e_k (0-based) in rational form.
inline RationalAnalytic tm_function(const BlaschkeProduct& alpha, int k) {
  const auto& a = alpha.zeros();
  cplx ak = a[static_cast<std::size_t>(k)];
  Polynomial num{std::sqrt(1.0 - std::norm(ak))};
  for (int j = 0; j < k; ++j)
    num = num * Polynomial{-a[static_cast<std::size_t>(j)], cplx(1.0)};
  Polynomial den{cplx(1.0)};
  for (int j = 0; j <= k; ++j)
    den = den * Polynomial{cplx(1.0), -std::conj(a[static_cast<std::size_t>(j)])};
  return RationalAnalytic(std::move(num), std::move(den), false);
}

}  // namespace detail

/// Operator matrix entries <phi e_k^alpha, e_j^beta> by convolution against
/// Taylor slices; no quadrature anywhere on this path.
inline AttoMatrix atto_matrix_oracle(const BlaschkeProduct& alpha,
                                     const BlaschkeProduct& beta,
                                     const Symbol& s, int order = 256) {
  for (cplx z : alpha.zeros())
    if (std::abs(z) > 1.0 - kOraclePoleMargin)
      throw TruncationInsufficient("alpha zero within 1e-3 of the circle");
  for (cplx z : beta.zeros())
    if (std::abs(z) > 1.0 - kOraclePoleMargin)
      throw TruncationInsufficient("beta zero within 1e-3 of the circle");
  FourierSlice phi = fourier_of(s, order);
  const int na = alpha.degree(), nb = beta.degree();
  std::vector<FourierSlice> eb;
  eb.reserve(static_cast<std::size_t>(nb));
  for (int j = 0; j < nb; ++j)
    eb.push_back(fourier_of(detail::tm_function(beta, j), order));
  Eigen::MatrixXcd m(nb, na);
  for (int k = 0; k < na; ++k) {
    FourierSlice ek = fourier_of(detail::tm_function(alpha, k), order);
    FourierSlice prod = convolve(phi, ek);
    prod.require_tail("atto_matrix_oracle");
    FourierSlice projected = model_project(beta, prod);
    for (int j = 0; j < nb; ++j) {
      cplx acc(0.0);
      for (int n = 0; n <= order; ++n)
        acc += projected.at(n) *
               std::conj(eb[static_cast<std::size_t>(j)].at(n));
      m(j, k) = acc;
    }
  }
  return AttoMatrix{alpha, beta, std::move(m)};
}

/// Doubles the truncation order until the tail invariants pass.
inline AttoMatrix atto_matrix_oracle_adaptive(const BlaschkeProduct& alpha,
                                              const BlaschkeProduct& beta,
                                              const Symbol& s,
                                              int initial_order = 256,
                                              int max_order = 4096) {
  for (int order = initial_order;; order *= 2) {
    try {
      return atto_matrix_oracle(alpha, beta, s, order);
    } catch (const TruncationInsufficient&) {
      if (2 * order > max_order) throw;
    }
  }
}

}  // namespace atto
