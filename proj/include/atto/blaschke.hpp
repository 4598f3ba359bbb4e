// Finite Blaschke products: evaluation, derivatives, Crofoot composition.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "atto/errors.hpp"
#include "atto/polynomial.hpp"

namespace atto {

inline constexpr double kInteriorMargin = 1e-12;   // zeros stay inside by this much
inline constexpr double kUnimodularTol = 1e-14;

/// Point of the open unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(cplx v) : v_(v) {
    if (std::abs(v) > 1.0 - kInteriorMargin)
      throw InvariantViolation("disk point has modulus " +
                               std::to_string(std::abs(v)) +
                               ", not strictly inside the unit disk");
  }
  cplx value() const { return v_; }

 private:
  cplx v_;
};

/// Point of the unit circle.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(cplx v) : v_(v) {
    if (std::abs(std::abs(v) - 1.0) > kUnimodularTol)
      throw InvariantViolation("boundary point has modulus " +
                               std::to_string(std::abs(v)));
  }
  cplx value() const { return v_; }

 private:
  cplx v_;
};

/// Finite Blaschke product: unimodular constant times Mobius factors
/// (z - a_j)/(1 - conj(a_j) z) over an ordered list of interior zeros.
/// Always nonconstant (degree >= 1).  Immutable.
class BlaschkeProduct {
 public:
  BlaschkeProduct(cplx constant, std::vector<cplx> zeros)
      : constant_(constant), zeros_(std::move(zeros)) {
    if (std::abs(std::abs(constant_) - 1.0) > kUnimodularTol)
      throw InvariantViolation("constant has modulus " +
                               std::to_string(std::abs(constant_)));
    if (zeros_.empty())
      throw InvariantViolation("degree-0 inner functions are not admitted");
    for (std::size_t j = 0; j < zeros_.size(); ++j)
      if (std::abs(zeros_[j]) > 1.0 - kInteriorMargin)
        throw InvariantViolation("zero " + std::to_string(j) +
                                 " has modulus " +
                                 std::to_string(std::abs(zeros_[j])) +
                                 ", not strictly inside the unit disk");
  }

  /// z^n.
  static BlaschkeProduct monomial(int n) {
    return BlaschkeProduct(cplx(1.0),
                           std::vector<cplx>(static_cast<std::size_t>(n)));
  }

  cplx constant() const { return constant_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  cplx operator()(cplx z) const {
    cplx acc = constant_;
    for (cplx a : zeros_) acc *= (z - a) / (cplx(1.0) - std::conj(a) * z);
    return acc;
  }

  /// Exact derivative by the product rule over Mobius factors; each factor
  /// has derivative (1 - |a|^2)/(1 - conj(a) z)^2, so zeros of the product
  /// need no special casing.
  cplx derivative(cplx z) const {
    const int n = degree();
    std::vector<cplx> factor(static_cast<std::size_t>(n));
    std::vector<cplx> dfactor(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      cplx a = zeros_[static_cast<std::size_t>(j)];
      cplx den = cplx(1.0) - std::conj(a) * z;
      factor[static_cast<std::size_t>(j)] = (z - a) / den;
      dfactor[static_cast<std::size_t>(j)] = (1.0 - std::norm(a)) / (den * den);
    }
    std::vector<cplx> prefix(static_cast<std::size_t>(n) + 1, cplx(1.0));
    std::vector<cplx> suffix(static_cast<std::size_t>(n) + 1, cplx(1.0));
    for (int j = 0; j < n; ++j)
      prefix[static_cast<std::size_t>(j) + 1] =
          prefix[static_cast<std::size_t>(j)] * factor[static_cast<std::size_t>(j)];
    for (int j = n - 1; j >= 0; --j)
      suffix[static_cast<std::size_t>(j)] =
          suffix[static_cast<std::size_t>(j) + 1] * factor[static_cast<std::size_t>(j)];
    cplx acc(0.0);
    for (int j = 0; j < n; ++j)
      acc += dfactor[static_cast<std::size_t>(j)] *
             prefix[static_cast<std::size_t>(j)] *
             suffix[static_cast<std::size_t>(j) + 1];
    return constant_ * acc;
  }

  /// Numerator c * prod(z - a_j) of the rational form.
  Polynomial numerator() const {
    return Polynomial::from_roots(zeros_, constant_);
  }

  /// Denominator prod(1 - conj(a_j) z).
  Polynomial denominator() const {
    Polynomial d{cplx(1.0)};
    for (cplx a : zeros_) d = d * Polynomial{cplx(1.0), -std::conj(a)};
    return d;
  }

 private:
  cplx constant_;
  std::vector<cplx> zeros_;
};

/// Deterministic quasi-random points of the disk used by agreement checks.
inline std::vector<cplx> agreement_points(int count, double radius = 0.95) {
  std::mt19937_64 eng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<cplx> pts(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double r = radius * std::sqrt(unif(eng));
    double t = 2.0 * M_PI * unif(eng);
    pts[static_cast<std::size_t>(k)] = std::polar(r, t);
  }
  return pts;
}

/// Pointwise equality on the closed disk.  Zero lists are order-sensitive,
/// so product identity is decided by evaluation agreement.
inline bool eval_agree(const BlaschkeProduct& f, const BlaschkeProduct& g,
                       int points = 64, double tol = 1e-10) {
  for (cplx z : agreement_points(points))
    if (std::abs(f(z) - g(z)) > tol) return false;
  return true;
}

/// Disk-automorphism composition (w - B)/(1 - conj(w) B) as a Blaschke
/// product of the same degree.  Zeros solve B(z) = w; the constant is fixed
/// by matching the target value at a boundary point.
inline BlaschkeProduct crofoot_target(const BlaschkeProduct& b, DiskPoint w) {
  const cplx wv = w.value();
  // alpha_0 = -alpha exactly: zeros unchanged, constant negated.
  if (wv == cplx(0.0)) return BlaschkeProduct(-b.constant(), b.zeros());
  Polynomial num = b.numerator();
  Polynomial den = b.denominator();
  Polynomial p = wv * den - num;  // roots of B(z) = w
  std::vector<cplx> zeros = p.roots();
  if (static_cast<int>(zeros.size()) != b.degree())
    throw RootFindingFailure("Crofoot zero recovery lost degree");

  Polynomial dnum = num.derivative(), dden = den.derivative();
  for (cplx& z : zeros) {
    // Newton polish on B(z) - w in rational form.
    for (int it = 0; it < 8; ++it) {
      cplx nv = num(z), dv = den(z);
      cplx f = nv / dv - wv;
      if (std::abs(f) < 1e-15) break;
      cplx df = (dnum(z) * dv - nv * dden(z)) / (dv * dv);
      if (std::abs(df) == 0.0) break;
      cplx step = f / df;
      if (std::abs(num(z - step) / den(z - step) - wv) < std::abs(f)) z -= step;
      else break;
    }
    if (std::abs(b(z) - wv) > 1e-12)
      throw RootFindingFailure("Crofoot zero residual " +
                               sci(std::abs(b(z) - wv)));
    if (std::abs(z) > 1.0 - kInteriorMargin)
      throw InvariantViolation("recovered Crofoot zero has modulus " +
                               std::to_string(std::abs(z)));
  }

  // Pick the boundary anchor farthest from the recovered zeros.
  cplx anchor(1.0);
  double best = -1.0;
  for (int k = 0; k < 8; ++k) {
    cplx cand = std::polar(1.0, 2.0 * M_PI * k / 8.0 + 0.123);
    double dist = 1e300;
    for (cplx z : zeros) dist = std::min(dist, std::abs(cand - z));
    if (dist > best) { best = dist; anchor = cand; }
  }
  cplx bv = b(anchor);
  cplx target = (wv - bv) / (cplx(1.0) - std::conj(wv) * bv);
  cplx prod(1.0);
  for (cplx z : zeros)
    prod *= (anchor - z) / (cplx(1.0) - std::conj(z) * anchor);
  cplx constant = target / prod;
  constant /= std::abs(constant);  // clamp rounding off the circle
  return BlaschkeProduct(constant, std::move(zeros));
}

/// Double Crofoot composition returns the original product.
inline bool involution_check(const BlaschkeProduct& b, DiskPoint w) {
  BlaschkeProduct twice = crofoot_target(crofoot_target(b, w), w);
  return eval_agree(b, twice, 64, 1e-9);
}

}  // namespace atto
