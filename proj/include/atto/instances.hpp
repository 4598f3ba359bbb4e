// Seeded random instances for property suites and the verify command.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "atto/blaschke.hpp"
#include "atto/modelspace.hpp"
#include "atto/rational.hpp"
#include "atto/symbol.hpp"

namespace atto {

/// Deterministic generator of library values; every draw consumes a fixed
/// number of engine steps for a given request, so suites replay exactly.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

  /// Random point of the unit circle.
  cplx unit() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

  /// Area-uniform point of the disk of radius rmax.
  cplx disk(double rmax) {
    double r = rmax * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * M_PI));
  }

  /// Point of the square [-half, half]^2.
  cplx box(double half) {
    double re = uniform(-half, half);
    double im = uniform(-half, half);
    return cplx(re, im);
  }

  BlaschkeProduct blaschke(int min_degree, int max_degree,
                           double zero_radius = 0.8) {
    int n = uniform_int(min_degree, max_degree);
    std::vector<cplx> zeros(static_cast<std::size_t>(n));
    for (cplx& z : zeros) z = disk(zero_radius);
    return BlaschkeProduct(unit(), std::move(zeros));
  }

  /// Coefficients uniform in the unit box scaled by `box_half`; degree
  /// uniform in [0, max_degree].
  Polynomial polynomial(int max_degree, double box_half = 1.0) {
    int n = uniform_int(0, max_degree);
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (cplx& x : c) x = box(box_half);
    return Polynomial(std::move(c));
  }

  /// Rational part with well-separated poles (modulus in [2, 4]) when
  /// pole_count > 0.
  RationalAnalytic rational(int max_degree, double box_half = 1.0,
                            int pole_count = 0) {
    Polynomial num = polynomial(max_degree, box_half);
    Polynomial den{cplx(1.0)};
    for (int i = 0; i < pole_count; ++i) {
      cplx p = std::polar(uniform(2.0, 4.0), uniform(0.0, 2.0 * M_PI));
      den = den * Polynomial{cplx(1.0), -1.0 / p};
    }
    return RationalAnalytic(std::move(num), std::move(den), false);
  }

  /// Generic two-sided symbol with rational parts.
  Symbol symbol(int max_degree = 4, double box_half = 1.0) {
    return Symbol(rational(max_degree, box_half, uniform_int(0, 2)),
                  rational(max_degree, box_half, uniform_int(0, 2)));
  }

  ModelSpaceElement element(const ModelSpaceBasis& basis,
                            double box_half = 1.0) {
    Eigen::VectorXcd c(basis.dim());
    for (int k = 0; k < basis.dim(); ++k) c(k) = box(box_half);
    return ModelSpaceElement(basis, std::move(c));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace atto
