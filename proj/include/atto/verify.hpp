// Property suites behind the verify command and the acceptance tests.
//
// Each suite draws deterministic random instances, measures the worst
// residual of one operator identity, and reports pass/fail against a fixed
// tolerance.  Suites are independently seeded, so trial counts of one never
// shift the instances of another.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "atto/fourier.hpp"
#include "atto/instances.hpp"
#include "atto/symbol.hpp"
#include "atto/tto.hpp"

namespace atto::verify {

struct PropertyResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

namespace detail {

inline std::uint64_t suite_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t x = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  return x;
}

inline double entry_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline PropertyResult close(std::string name, int trials, double worst,
                            double tol) {
  return PropertyResult{std::move(name), trials, worst, tol, worst <= tol};
}

/// Smallest misfit of (chi, psi) against the kernel-shift family, used to
/// keep generated pairs well away from the zero class.
inline double pair_shift_misfit(const CanonicalPair& p) {
  ModelSpaceElement k0a = kernel(p.chi.basis(), cplx(0.0));
  ModelSpaceElement k0b = kernel(p.psi.basis(), cplx(0.0));
  double denom = k0a.coeffs().squaredNorm() + k0b.coeffs().squaredNorm();
  cplx c = (inner_product(p.psi, k0b) - std::conj(inner_product(p.chi, k0a))) /
           denom;
  double r2 = (p.chi.coeffs() + std::conj(c) * k0a.coeffs()).squaredNorm() +
              (p.psi.coeffs() - c * k0b.coeffs()).squaredNorm();
  return std::sqrt(r2);
}

}  // namespace detail

/// Symbols of the form conj(alpha h1) + beta h2 assemble to the zero matrix.
inline PropertyResult zero_symbol_forward(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 1));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 6);
    BlaschkeProduct beta = rng.blaschke(1, 6);
    Symbol s = zero_class_symbol(alpha, beta,
                                 RationalAnalytic::polynomial(rng.polynomial(4)),
                                 RationalAnalytic::polynomial(rng.polynomial(4)));
    worst = std::max(worst, atto_matrix(alpha, beta, s).operator_norm());
  }
  return detail::close("zero_symbol_forward", trials, worst, 1e-9);
}

/// The symbol-level verdict of is_zero_symbol matches the matrix norm on
/// random pairs, including planted kernel-shift pairs.
inline PropertyResult zero_symbol_converse(std::uint64_t seed, int trials,
                                           int planted = -1) {
  if (planted < 0) planted = trials / 10;
  InstanceRng rng(detail::suite_seed(seed, 2));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ModelSpaceBasis ab(rng.blaschke(1, 6));
    ModelSpaceBasis bb(rng.blaschke(1, 6));
    bool plant = planted > 0 && t % std::max(1, trials / planted) == 0;
    CanonicalPair pair{ModelSpaceElement::zero(ab), ModelSpaceElement::zero(bb)};
    if (plant) {
      pair = pair_ambiguity_shift(pair, rng.box(1.0));
    } else {
      do {
        pair = CanonicalPair{rng.element(ab), rng.element(bb)};
      } while (detail::pair_shift_misfit(pair) <
               1e-3 * (1.0 + pair.chi.norm() + pair.psi.norm()));
    }
    Symbol s = symbol_from_pair(pair);
    ZeroTestResult res = is_zero_symbol(ab, bb, s);
    double norm = atto_matrix(ab, bb, s).operator_norm();
    bool agree = res.is_zero == (norm < 1e-10);
    worst = std::max(worst, agree ? (res.is_zero ? norm : 0.0) : 1.0);
  }
  return detail::close("zero_symbol_converse", trials, worst, 1e-10);
}

/// A_phi equals the matrix of its canonical pair conj(chi) + psi.
inline PropertyResult canonical_pair_reduction(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 3));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ModelSpaceBasis ab(rng.blaschke(1, 5));
    ModelSpaceBasis bb(rng.blaschke(1, 5));
    Symbol s = rng.symbol();
    AttoMatrix direct = atto_matrix(ab, bb, s);
    CanonicalPair pair = canonical_pair(ab, bb, s);
    AttoMatrix reduced = atto_matrix(ab, bb, symbol_from_pair(pair));
    worst = std::max(worst, detail::entry_gap(direct.entries, reduced.entries));
  }
  return detail::close("canonical_pair_reduction", trials, worst, 1e-9);
}

/// Kernel shifts of a pair never change the assembled matrix.
inline PropertyResult pair_shift_invariance(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 4));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ModelSpaceBasis ab(rng.blaschke(1, 4));
    ModelSpaceBasis bb(rng.blaschke(1, 4));
    CanonicalPair pair{rng.element(ab), rng.element(bb)};
    CanonicalPair shifted = pair_ambiguity_shift(pair, rng.box(1.5));
    AttoMatrix m0 = atto_matrix(ab, bb, symbol_from_pair(pair));
    AttoMatrix m1 = atto_matrix(ab, bb, symbol_from_pair(shifted));
    worst = std::max(worst, detail::entry_gap(m0.entries, m1.entries));
  }
  return detail::close("pair_shift_invariance", trials, worst, 1e-9);
}

/// Crofoot operators are unitary and invert by their adjoint.
inline PropertyResult crofoot_unitarity(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 5));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 6);
    CrofootOperator j = crofoot_operator(alpha, DiskPoint(rng.disk(0.7)));
    int n = j.source.dim();
    double defect =
        (j.matrix.adjoint() * j.matrix - Eigen::MatrixXcd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    worst = std::max(worst, defect);
  }
  return detail::close("crofoot_unitarity", trials, worst, 1e-10);
}

/// Transformed kernels agree with the kernels of the transformed product.
inline PropertyResult crofoot_kernel_identity(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 6));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 5);
    DiskPoint w(rng.disk(0.7)), z(rng.disk(0.8));
    ModelSpaceElement transformed = kernel_transform(alpha, w, z);
    ModelSpaceElement direct = kernel(transformed.basis(), z.value());
    worst = std::max(worst, (transformed - direct).norm());
  }
  return detail::close("crofoot_kernel_identity", trials, worst, 1e-10);
}

/// J_b A (J_a)^{-1} equals the operator of the transported symbol.
inline PropertyResult crofoot_conjugation(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 7));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 4);
    BlaschkeProduct beta = rng.blaschke(1, 4);
    DiskPoint a(rng.disk(0.6)), b(rng.disk(0.6));
    Symbol s = rng.symbol(3);
    CrofootOperator ja = crofoot_operator(alpha, a);
    CrofootOperator jb = crofoot_operator(beta, b);
    AttoMatrix m = atto_matrix(ja.source, jb.source, s);
    Symbol transported = transport_symbol(alpha, beta, a, b, s);
    AttoMatrix mt = atto_matrix(ja.target, jb.target, transported);
    Eigen::MatrixXcd conjugated =
        jb.matrix * m.entries * ja.matrix.adjoint();
    worst = std::max(worst, detail::entry_gap(conjugated, mt.entries));
  }
  return detail::close("crofoot_conjugation", trials, worst, 1e-9);
}

/// Interior rank-one symbol beta/(z-w) matches its outer product.
inline PropertyResult rank_one_interior_a_suite(std::uint64_t seed,
                                                int trials) {
  InstanceRng rng(detail::suite_seed(seed, 8));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 5);
    BlaschkeProduct beta = rng.blaschke(1, 5);
    DiskPoint w(rng.disk(0.7));
    auto [s, m] = rank_one_interior_a(alpha, beta, w);
    AttoMatrix op = outer_product(conjugate_kernel(ModelSpaceBasis(beta), w),
                                  kernel(ModelSpaceBasis(alpha), w));
    worst = std::max(worst, detail::entry_gap(m.entries, op.entries));
  }
  return detail::close("rank_one_interior_a", trials, worst, 1e-9);
}

/// Interior rank-one symbol conj(alpha)/(conj(z)-conj(w)) matches its outer
/// product and the adjoint of the swapped case-(a) operator.
inline PropertyResult rank_one_interior_b_suite(std::uint64_t seed,
                                                int trials) {
  InstanceRng rng(detail::suite_seed(seed, 9));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 5);
    BlaschkeProduct beta = rng.blaschke(1, 5);
    DiskPoint w(rng.disk(0.7));
    auto [s, m] = rank_one_interior_b(alpha, beta, w);
    AttoMatrix op = outer_product(kernel(ModelSpaceBasis(beta), w),
                                  conjugate_kernel(ModelSpaceBasis(alpha), w));
    worst = std::max(worst, detail::entry_gap(m.entries, op.entries));
    auto [s2, swapped] = rank_one_interior_a(beta, alpha, w);
    worst = std::max(
        worst, detail::entry_gap(m.entries, adjoint_matrix(swapped).entries));
  }
  return detail::close("rank_one_interior_b", trials, worst, 1e-9);
}

/// Boundary rank-one symbol matches its outer product.
inline PropertyResult rank_one_boundary_suite(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 10));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 4);
    BlaschkeProduct beta = rng.blaschke(1, 4);
    BoundaryPoint eta(rng.unit());
    auto [s, m] = rank_one_boundary(alpha, beta, eta);
    AttoMatrix op = outer_product(kernel(ModelSpaceBasis(beta), eta),
                                  kernel(ModelSpaceBasis(alpha), eta));
    worst = std::max(worst, detail::entry_gap(m.entries, op.entries));
  }
  return detail::close("rank_one_boundary", trials, worst, 1e-8);
}

/// Boundary rank-one matrices are radial limits: deviations at w = r eta
/// strictly decrease over r = 0.9, 0.99, 0.999.
inline PropertyResult rank_one_boundary_limit(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 11));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ModelSpaceBasis ab(rng.blaschke(1, 4));
    ModelSpaceBasis bb(rng.blaschke(1, 4));
    cplx eta = rng.unit();
    AttoMatrix limit = outer_product(kernel(bb, BoundaryPoint(eta)),
                                     kernel(ab, BoundaryPoint(eta)));
    double prev = -1.0;
    bool decreasing = true;
    for (double r : {0.9, 0.99, 0.999}) {
      AttoMatrix approx = outer_product(kernel(bb, r * eta), kernel(ab, r * eta));
      double dev = (approx.entries - limit.entries).cwiseAbs().maxCoeff();
      if (prev >= 0.0 && dev >= prev) decreasing = false;
      prev = dev;
    }
    worst = std::max(worst, decreasing ? 0.0 : 1.0);
  }
  return detail::close("rank_one_boundary_limit", trials, worst, 0.5);
}

/// Conjugation matrices are unitary, symmetric, and involutive.
inline PropertyResult conjugation_matrix_suite(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 12));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ModelSpaceBasis basis(rng.blaschke(1, 6));
    ConjugationMatrix c = conjugation_matrix(basis);
    int n = basis.dim();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    worst = std::max(worst,
                     (c.matrix.adjoint() * c.matrix - id).cwiseAbs().maxCoeff());
    worst = std::max(
        worst, (c.matrix - c.matrix.transpose()).cwiseAbs().maxCoeff());
    worst = std::max(
        worst, (c.matrix * c.matrix.conjugate() - id).cwiseAbs().maxCoeff());
  }
  return detail::close("conjugation_matrix", trials, worst, 1e-10);
}

/// C_alpha maps kernels to conjugate kernels, interior and boundary alike.
inline PropertyResult conjugate_kernel_identity(std::uint64_t seed,
                                                int trials) {
  InstanceRng rng(detail::suite_seed(seed, 13));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ModelSpaceBasis basis(rng.blaschke(1, 6));
    ConjugationMatrix c = conjugation_matrix(basis);
    cplx w = rng.disk(0.8);
    worst = std::max(
        worst,
        (c.apply(kernel(basis, w)) - conjugate_kernel(basis, w)).norm());
    cplx eta = rng.unit();
    worst = std::max(
        worst,
        (c.apply(kernel(basis, eta)) - conjugate_kernel(basis, eta)).norm());
    // Boundary collapse: conjugate kernel is a unimodular multiple of the
    // kernel at the same point.
    cplx mu = basis.alpha()(eta) * std::conj(eta);
    worst = std::max(
        worst,
        (conjugate_kernel(basis, eta) - mu * kernel(basis, eta)).norm());
  }
  return detail::close("conjugate_kernel_identity", trials, worst, 1e-10);
}

/// Quadrature and Fourier-oracle matrices agree across all symbol builders.
inline PropertyResult oracle_agreement(std::uint64_t seed, int trials) {
  InstanceRng rng(detail::suite_seed(seed, 14));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 4);
    BlaschkeProduct beta = rng.blaschke(1, 4);
    Symbol s;
    switch (t % 5) {
      case 0:
        s = zero_class_symbol(alpha, beta,
                              RationalAnalytic::polynomial(rng.polynomial(3)),
                              RationalAnalytic::polynomial(rng.polynomial(3)));
        break;
      case 1:
        s = rng.symbol(3);
        break;
      case 2:
        s = rank_one_interior_a(alpha, beta, DiskPoint(rng.disk(0.7))).first;
        break;
      case 3:
        s = rank_one_interior_b(alpha, beta, DiskPoint(rng.disk(0.7))).first;
        break;
      default:
        s = rank_one_boundary(alpha, beta, BoundaryPoint(rng.unit())).first;
        break;
    }
    AttoMatrix quad = atto_matrix(alpha, beta, s);
    AttoMatrix oracle = atto_matrix_oracle_adaptive(alpha, beta, s);
    worst = std::max(worst, detail::entry_gap(quad.entries, oracle.entries));
  }
  return detail::close("oracle_agreement", trials, worst, 1e-8);
}

struct Report {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyResult> properties;

  bool all_pass() const {
    for (const auto& p : properties)
      if (!p.pass) return false;
    return true;
  }
};

/// Runs every suite at the given trial count.
inline Report run_all(std::uint64_t seed, int trials) {
  Report r{seed, trials, {}};
  r.properties.push_back(zero_symbol_forward(seed, trials));
  r.properties.push_back(zero_symbol_converse(seed, trials));
  r.properties.push_back(canonical_pair_reduction(seed, trials));
  r.properties.push_back(pair_shift_invariance(seed, trials));
  r.properties.push_back(crofoot_unitarity(seed, trials));
  r.properties.push_back(crofoot_kernel_identity(seed, trials));
  r.properties.push_back(crofoot_conjugation(seed, trials));
  r.properties.push_back(rank_one_interior_a_suite(seed, trials));
  r.properties.push_back(rank_one_interior_b_suite(seed, trials));
  r.properties.push_back(rank_one_boundary_suite(seed, trials));
  r.properties.push_back(rank_one_boundary_limit(seed, trials));
  r.properties.push_back(conjugation_matrix_suite(seed, trials));
  r.properties.push_back(conjugate_kernel_identity(seed, trials));
  r.properties.push_back(oracle_agreement(seed, trials));
  return r;
}

}  // namespace atto::verify
