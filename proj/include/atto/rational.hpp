// Rational functions analytic on the closed unit disk.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "atto/blaschke.hpp"
#include "atto/errors.hpp"
#include "atto/polynomial.hpp"

namespace atto {

inline constexpr double kPoleMargin = 1e-9;  // poles stay outside by this much

/// num/den with every denominator root strictly outside the closed disk,
/// normalized so den(0) = 1.  These are the H-infinity representatives all
/// symbols are built from.
class RationalAnalytic {
 public:
  RationalAnalytic() : num_{}, den_{cplx(1.0)} {}

  RationalAnalytic(Polynomial num, Polynomial den, bool validate = true)
      : num_(std::move(num)), den_(std::move(den)) {
    cplx d0 = den_(cplx(0.0));
    if (std::abs(d0) == 0.0)
      throw PoleOnOrInsideDisk("denominator vanishes at the origin");
    num_ = (cplx(1.0) / d0) * num_;
    den_ = (cplx(1.0) / d0) * den_;
    if (validate) {
      for (cplx p : den_.roots())
        if (std::abs(p) < 1.0 + kPoleMargin)
          throw PoleOnOrInsideDisk("denominator root of modulus " +
                                   std::to_string(std::abs(p)) +
                                   " inside the pole-free annulus");
    }
  }

  static RationalAnalytic polynomial(Polynomial p) {
    return RationalAnalytic(std::move(p), Polynomial{cplx(1.0)}, false);
  }

  static RationalAnalytic constant(cplx c) {
    return polynomial(Polynomial{c});
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  cplx operator()(cplx z) const { return num_(z) / den_(z); }

  bool is_zero(double tol = 0.0) const { return num_.is_zero(tol); }

  friend RationalAnalytic operator+(const RationalAnalytic& a,
                                    const RationalAnalytic& b) {
    return RationalAnalytic(a.num_ * b.den_ + b.num_ * a.den_,
                            a.den_ * b.den_, false);
  }

  friend RationalAnalytic operator-(const RationalAnalytic& a,
                                    const RationalAnalytic& b) {
    return a + (cplx(-1.0) * b);
  }

  friend RationalAnalytic operator*(const RationalAnalytic& a,
                                    const RationalAnalytic& b) {
    return RationalAnalytic(a.num_ * b.num_, a.den_ * b.den_, false);
  }

  friend RationalAnalytic operator*(cplx s, const RationalAnalytic& a) {
    return RationalAnalytic(s * a.num_, a.den_, false);
  }

 private:
  Polynomial num_, den_;
};

/// Blaschke product as a rational function; poles sit at 1/conj(zeros).
inline RationalAnalytic to_rational(const BlaschkeProduct& b) {
  return RationalAnalytic(b.numerator(), b.denominator(), false);
}

/// Reproducing kernel (1 - conj(B(w)) B(z))/(1 - conj(w) z) in rational
/// form.  For boundary w the circle pole is removable and gets deflated,
/// leaving poles of B only.
inline RationalAnalytic kernel_rational(const BlaschkeProduct& b, cplx w) {
  Polynomial n = b.numerator(), d = b.denominator();
  Polynomial top = d - std::conj(b(w)) * n;
  if (std::abs(std::abs(w) - 1.0) <= kUnimodularTol) {
    // top(w) = (1 - |B(w)|^2) D(w) = 0: divide the circle factor out.
    auto [quot, rem] = (cplx(-1.0 / std::conj(w)) * top).divide_by_root(w);
    (void)rem;  // vanishes up to rounding
    return RationalAnalytic(quot, d, false);
  }
  return RationalAnalytic(top, d * Polynomial{cplx(1.0), -std::conj(w)}, false);
}

/// Conjugate kernel (B(z) - B(w))/(z - w) in rational form; the z = w
/// singularity is removable and deflated exactly.
inline RationalAnalytic conjugate_kernel_rational(const BlaschkeProduct& b,
                                                  cplx w) {
  Polynomial n = b.numerator(), d = b.denominator();
  Polynomial top = n - b(w) * d;
  auto [quot, rem] = top.divide_by_root(w);
  (void)rem;
  return RationalAnalytic(quot, d, false);
}

}  // namespace atto
