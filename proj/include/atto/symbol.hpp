// Boundary symbols phi = g_plus + conj(g_minus), canonical pairs, and the
// zero-operator test.
#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "atto/modelspace.hpp"
#include "atto/rational.hpp"

namespace atto {

/// Symbol of an operator K_alpha -> K_beta as a pair of analytic rational
/// parts: phi(z) = g_plus(z) + conj(g_minus(z)) on |z| = 1.  The split is
/// made unique by folding the constant of g_minus into g_plus, so that
/// g_minus(0) = 0.
class Symbol {
 public:
  Symbol() = default;

  Symbol(RationalAnalytic g_plus, RationalAnalytic g_minus)
      : g_plus_(std::move(g_plus)), g_minus_(std::move(g_minus)) {
    cplx c0 = g_minus_(cplx(0.0));
    if (c0 != cplx(0.0)) {
      g_plus_ = g_plus_ + RationalAnalytic::constant(std::conj(c0));
      g_minus_ = g_minus_ - RationalAnalytic::constant(c0);
    }
  }

  static Symbol analytic(RationalAnalytic g_plus) {
    return Symbol(std::move(g_plus), RationalAnalytic());
  }

  const RationalAnalytic& g_plus() const { return g_plus_; }
  const RationalAnalytic& g_minus() const { return g_minus_; }

  /// Value on the unit circle.
  cplx boundary_value(cplx z) const {
    return g_plus_(z) + std::conj(g_minus_(z));
  }

  friend Symbol operator+(const Symbol& a, const Symbol& b) {
    return Symbol(a.g_plus_ + b.g_plus_, a.g_minus_ + b.g_minus_);
  }

  friend Symbol operator*(cplx s, const Symbol& a) {
    // s*conj(g) = conj(conj(s) g), so the coanalytic part scales by conj(s).
    return Symbol(s * a.g_plus_, std::conj(s) * a.g_minus_);
  }

 private:
  RationalAnalytic g_plus_;   // analytic part
  RationalAnalytic g_minus_;  // conjugated part, g_minus(0) = 0
};

/// Normalized symbol from raw analytic parts.
inline Symbol make_symbol(RationalAnalytic g_plus, RationalAnalytic g_minus) {
  return Symbol(std::move(g_plus), std::move(g_minus));
}

/// conj(alpha h1) + beta h2: a symbol whose operator K_alpha -> K_beta
/// vanishes identically.
inline Symbol zero_class_symbol(const BlaschkeProduct& alpha,
                                const BlaschkeProduct& beta,
                                const RationalAnalytic& h1,
                                const RationalAnalytic& h2) {
  return Symbol(to_rational(beta) * h2, to_rational(alpha) * h1);
}

/// Representatives chi in K_alpha, psi in K_beta with
/// A_phi = A_{conj(chi) + psi}; unique up to the scalar kernel shift below.
struct CanonicalPair {
  ModelSpaceElement chi;
  ModelSpaceElement psi;
};

inline CanonicalPair canonical_pair(const ModelSpaceBasis& alpha_basis,
                                    const ModelSpaceBasis& beta_basis,
                                    const Symbol& s,
                                    const QuadratureOptions& opt = {}) {
  const RationalAnalytic& gm = s.g_minus();
  const RationalAnalytic& gp = s.g_plus();
  return CanonicalPair{
      project(alpha_basis, [&](cplx z) { return gm(z); }, opt),
      project(beta_basis, [&](cplx z) { return gp(z); }, opt)};
}

/// (chi - conj(c) k_0^alpha, psi + c k_0^beta): the full ambiguity of a
/// canonical pair; the induced operator is unchanged.
inline CanonicalPair pair_ambiguity_shift(const CanonicalPair& p, cplx c) {
  ModelSpaceElement k0a = kernel(p.chi.basis(), cplx(0.0));
  ModelSpaceElement k0b = kernel(p.psi.basis(), cplx(0.0));
  return CanonicalPair{p.chi - std::conj(c) * k0a, p.psi + c * k0b};
}

/// Element of K_alpha as an explicit rational function over the common
/// denominator prod(1 - conj(a_j) z).
inline RationalAnalytic element_to_rational(const ModelSpaceElement& f) {
  const auto& zeros = f.basis().alpha().zeros();
  const int n = f.basis().dim();
  Polynomial den{cplx(1.0)};
  for (cplx a : zeros) den = den * Polynomial{cplx(1.0), -std::conj(a)};
  Polynomial num{};
  for (int k = 0; k < n; ++k) {
    cplx ak = zeros[static_cast<std::size_t>(k)];
    Polynomial term{f.coeffs()(k) * std::sqrt(1.0 - std::norm(ak))};
    for (int j = 0; j < k; ++j)
      term = term * Polynomial{-zeros[static_cast<std::size_t>(j)], cplx(1.0)};
    for (int j = k + 1; j < n; ++j)
      term = term *
             Polynomial{cplx(1.0), -std::conj(zeros[static_cast<std::size_t>(j)])};
    num = num + term;
  }
  return RationalAnalytic(num, den, false);
}

/// conj(chi) + psi as a Symbol.
inline Symbol symbol_from_pair(const CanonicalPair& p) {
  return Symbol(element_to_rational(p.psi), element_to_rational(p.chi));
}

/// Outcome of the zero-operator test, with the fitted shift scalar as a
/// certificate.
struct ZeroTestResult {
  bool is_zero;
  cplx c;           // best scalar with (chi, psi) = (-conj(c) k_0, c k_0)
  double residual;  // least-squares misfit of that form
  CanonicalPair pair;
};

/// Symbol-level zero test: the operator vanishes exactly when the canonical
/// pair is a kernel shift of (0, 0).  The scalar is fitted by least squares
/// and the misfit compared against tol scaled by the pair size.
inline ZeroTestResult is_zero_symbol(const ModelSpaceBasis& alpha_basis,
                                     const ModelSpaceBasis& beta_basis,
                                     const Symbol& s, double tol = 1e-9,
                                     const QuadratureOptions& opt = {}) {
  CanonicalPair p = canonical_pair(alpha_basis, beta_basis, s, opt);
  ModelSpaceElement k0a = kernel(alpha_basis, cplx(0.0));
  ModelSpaceElement k0b = kernel(beta_basis, cplx(0.0));
  double denom = k0a.coeffs().squaredNorm() + k0b.coeffs().squaredNorm();
  cplx c = (inner_product(p.psi, k0b) - std::conj(inner_product(p.chi, k0a))) /
           denom;
  double r2 = (p.chi.coeffs() + std::conj(c) * k0a.coeffs()).squaredNorm() +
              (p.psi.coeffs() - c * k0b.coeffs()).squaredNorm();
  double residual = std::sqrt(r2);
  double scale = 1.0 + p.chi.norm() + p.psi.norm();
  return ZeroTestResult{residual <= tol * scale, c, residual, std::move(p)};
}

}  // namespace atto
