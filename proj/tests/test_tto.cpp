#include <catch2/catch_amalgamated.hpp>

#include "atto/instances.hpp"
#include "atto/tto.hpp"

using atto::AttoMatrix;
using atto::BlaschkeProduct;
using atto::BoundaryPoint;
using atto::cplx;
using atto::DiskPoint;
using atto::ModelSpaceBasis;
using atto::Polynomial;
using atto::RationalAnalytic;
using atto::Symbol;

namespace {

Symbol analytic_poly(std::initializer_list<cplx> c) {
  return Symbol::analytic(RationalAnalytic::polynomial(Polynomial(c)));
}

double entry_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("compressed shift on K_{z^2}") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  AttoMatrix m = atto_matrix(z2, z2, analytic_poly({0.0, 1.0}));
  Eigen::MatrixXcd expected(2, 2);
  expected << 0.0, 0.0, 1.0, 0.0;
  CHECK(entry_gap(m.entries, expected) < 1e-12);
}

TEST_CASE("conj(z^2) + z^2 assembles to the zero matrix on K_{z^2}") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  Symbol s(RationalAnalytic::polynomial(Polynomial{0.0, 0.0, 1.0}),
           RationalAnalytic::polynomial(Polynomial{0.0, 0.0, 1.0}));
  CHECK(atto_matrix(z2, z2, s).operator_norm() < 1e-12);
}

TEST_CASE("inclusion of K_{z^2} into K_{z^3} under the constant symbol") {
  AttoMatrix m = atto_matrix(BlaschkeProduct::monomial(2),
                             BlaschkeProduct::monomial(3),
                             analytic_poly({1.0}));
  Eigen::MatrixXcd expected(3, 2);
  expected << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
  CHECK(entry_gap(m.entries, expected) < 1e-12);
}

TEST_CASE("matrix assembly is linear in the symbol") {
  atto::InstanceRng rng(89);
  for (int t = 0; t < 10; ++t) {
    ModelSpaceBasis ab(rng.blaschke(1, 5));
    ModelSpaceBasis bb(rng.blaschke(1, 5));
    Symbol s1 = rng.symbol(), s2 = rng.symbol();
    cplx lam = rng.box(2.0);
    AttoMatrix lhs = atto_matrix(ab, bb, s1 + lam * s2);
    Eigen::MatrixXcd rhs = atto_matrix(ab, bb, s1).entries +
                           lam * atto_matrix(ab, bb, s2).entries;
    CHECK(entry_gap(lhs.entries, rhs) < 1e-10);
  }
}

TEST_CASE("adjoint swaps the spaces and conjugates the symbol pair") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  AttoMatrix shift = atto_matrix(z2, z2, analytic_poly({0.0, 1.0}));
  AttoMatrix adj = adjoint_matrix(shift);
  Eigen::MatrixXcd expected(2, 2);
  expected << 0.0, 1.0, 0.0, 0.0;
  CHECK(entry_gap(adj.entries, expected) < 1e-12);

  // A_{conj(z)}^* = A_z on K_{z^2}.
  Symbol conj_z(RationalAnalytic(),
                RationalAnalytic::polynomial(Polynomial{0.0, 1.0}));
  CHECK(entry_gap(adjoint_matrix(atto_matrix(z2, z2, conj_z)).entries,
                  shift.entries) < 1e-12);

  atto::InstanceRng rng(97);
  for (int t = 0; t < 10; ++t) {
    ModelSpaceBasis ab(rng.blaschke(1, 4));
    ModelSpaceBasis bb(rng.blaschke(1, 4));
    atto::CanonicalPair pair{rng.element(ab), rng.element(bb)};
    AttoMatrix forward = atto_matrix(ab, bb, symbol_from_pair(pair));
    atto::CanonicalPair swapped{pair.psi, pair.chi};
    AttoMatrix backward = atto_matrix(bb, ab, symbol_from_pair(swapped));
    CHECK(entry_gap(adjoint_matrix(forward).entries, backward.entries) < 1e-9);
  }
}

TEST_CASE("constant-symbol collapse: k_0 symbols act like the constant 1") {
  atto::InstanceRng rng(101);
  ModelSpaceBasis ab(rng.blaschke(1, 5));
  ModelSpaceBasis bb(rng.blaschke(1, 5));
  AttoMatrix one = atto_matrix(ab, bb, analytic_poly({1.0}));
  Symbol k0b = Symbol::analytic(atto::kernel_rational(bb.alpha(), cplx(0.0)));
  Symbol k0a_conj(RationalAnalytic(),
                  atto::kernel_rational(ab.alpha(), cplx(0.0)));
  CHECK(entry_gap(atto_matrix(ab, bb, k0b).entries, one.entries) < 1e-10);
  CHECK(entry_gap(atto_matrix(ab, bb, k0a_conj).entries, one.entries) < 1e-10);
}

TEST_CASE("Crofoot operator on a one-dimensional space") {
  atto::CrofootOperator j = atto::crofoot_operator(
      BlaschkeProduct::monomial(1), DiskPoint(cplx(0.5)));
  REQUIRE(j.matrix.rows() == 1);
  CHECK(std::abs(std::abs(j.matrix(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("Crofoot operator at w = 0 is the basis identity") {
  atto::InstanceRng rng(103);
  BlaschkeProduct alpha = rng.blaschke(2, 5);
  atto::CrofootOperator j =
      atto::crofoot_operator(alpha, DiskPoint(cplx(0.0)));
  Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(alpha.degree(), alpha.degree());
  CHECK(entry_gap(j.matrix, id) < 1e-12);
}

TEST_CASE("Crofoot operator is unitary and inverts by its adjoint") {
  atto::InstanceRng rng(107);
  for (int t = 0; t < 10; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 6);
    DiskPoint w(rng.disk(0.7));
    atto::CrofootOperator j = atto::crofoot_operator(alpha, w);
    int n = j.source.dim();
    CHECK((j.matrix.adjoint() * j.matrix -
           Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);

    // The stated inverse multiplies by (1 - conj(w) alpha)/sqrt(1-|w|^2):
    // applying it pointwise to a transformed element recovers the original.
    atto::ModelSpaceElement f = rng.element(j.source);
    atto::ModelSpaceElement jf = j.apply(f);
    atto::ModelSpaceElement back = j.apply_inverse(jf);
    CHECK((back - f).norm() < 1e-10);
    for (cplx z : atto::agreement_points(8)) {
      cplx inv = (cplx(1.0) - std::conj(w.value()) * alpha(z)) /
                 std::sqrt(1.0 - std::norm(w.value()));
      CHECK(std::abs(back(z) - inv * jf(z)) < 1e-9);
    }
  }
}

TEST_CASE("kernel transform collapses at w = 0") {
  atto::InstanceRng rng(109);
  BlaschkeProduct alpha = rng.blaschke(1, 5);
  DiskPoint z(rng.disk(0.8));
  atto::ModelSpaceElement t =
      atto::kernel_transform(alpha, DiskPoint(cplx(0.0)), z);
  // K_{-alpha} shares the Takenaka-Malmquist basis of K_alpha, and the
  // kernels coincide, so the coefficients must match the direct ones.
  atto::ModelSpaceElement direct = atto::kernel(ModelSpaceBasis(alpha), z.value());
  CHECK((t.coeffs() - direct.coeffs()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("kernel transform agrees with direct kernels of the target") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  DiskPoint w(cplx(0.25));
  atto::ModelSpaceElement t =
      atto::kernel_transform(z2, w, DiskPoint(cplx(0.0)));
  atto::ModelSpaceElement direct =
      atto::kernel(ModelSpaceBasis(crofoot_target(z2, w)), cplx(0.0));
  CHECK((t - direct).norm() < 1e-10);

  atto::InstanceRng rng(113);
  for (int t2 = 0; t2 < 100; ++t2) {
    BlaschkeProduct alpha = rng.blaschke(1, 1);
    DiskPoint ww(rng.disk(0.7)), zz(rng.disk(0.8));
    atto::ModelSpaceElement lhs = atto::kernel_transform(alpha, ww, zz);
    atto::ModelSpaceElement rhs =
        atto::kernel(lhs.basis(), zz.value());
    CHECK((lhs - rhs).norm() < 1e-10);
  }
}

TEST_CASE("Crofoot operator carries kernels onto scaled target kernels") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  DiskPoint w(cplx(0.25));
  atto::CrofootOperator j = atto::crofoot_operator(z2, w);
  atto::InstanceRng rng(127);
  for (int t = 0; t < 10; ++t) {
    cplx z = rng.disk(0.8);
    atto::ModelSpaceElement jk = j.apply(atto::kernel(j.source, z));
    cplx scale = (cplx(1.0) - w.value() * std::conj(z2(z))) /
                 std::sqrt(1.0 - std::norm(w.value()));
    atto::ModelSpaceElement expected = scale * atto::kernel(j.target, z);
    CHECK((jk - expected).norm() < 1e-9);
  }
}

TEST_CASE("transport at a = b = 0 leaves the matrix unchanged") {
  atto::InstanceRng rng(131);
  BlaschkeProduct alpha = rng.blaschke(1, 4);
  BlaschkeProduct beta = rng.blaschke(1, 4);
  Symbol s = rng.symbol(3);
  DiskPoint origin{cplx(0.0)};
  Symbol moved = transport_symbol(alpha, beta, origin, origin, s);
  // alpha_0 = -alpha shares the basis, so the matrices agree entrywise.
  AttoMatrix m0 = atto_matrix(alpha, beta, s);
  AttoMatrix m1 = atto_matrix(crofoot_target(alpha, origin),
                              crofoot_target(beta, origin), moved);
  CHECK(entry_gap(m0.entries, m1.entries) < 1e-10);
}

TEST_CASE("transport to the zero-centering points of the proof") {
  BlaschkeProduct alpha(cplx(1.0), {cplx(0.3)});
  BlaschkeProduct beta(cplx(1.0), {cplx(0.2), cplx(-0.4)});
  DiskPoint a(alpha(cplx(0.0))), b(beta(cplx(0.0)));
  atto::InstanceRng rng(137);
  Symbol s = rng.symbol(3);
  atto::CrofootOperator ja = atto::crofoot_operator(alpha, a);
  atto::CrofootOperator jb = atto::crofoot_operator(beta, b);
  CHECK(std::abs(ja.target.alpha()(cplx(0.0))) < 1e-12);
  CHECK(std::abs(jb.target.alpha()(cplx(0.0))) < 1e-12);
  Symbol moved = transport_symbol(alpha, beta, a, b, s);
  AttoMatrix m = atto_matrix(ja.source, jb.source, s);
  AttoMatrix mt = atto_matrix(ja.target, jb.target, moved);
  CHECK(entry_gap(jb.matrix * m.entries * ja.matrix.adjoint(), mt.entries) <
        1e-9);
}

TEST_CASE("transport conjugation identity on random instances") {
  atto::InstanceRng rng(139);
  for (int t = 0; t < 10; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 4);
    BlaschkeProduct beta = rng.blaschke(1, 4);
    DiskPoint a(rng.disk(0.6)), b(rng.disk(0.6));
    Symbol s = rng.symbol(3);
    atto::CrofootOperator ja = atto::crofoot_operator(alpha, a);
    atto::CrofootOperator jb = atto::crofoot_operator(beta, b);
    Symbol moved = transport_symbol(alpha, beta, a, b, s);
    AttoMatrix m = atto_matrix(ja.source, jb.source, s);
    AttoMatrix mt = atto_matrix(ja.target, jb.target, moved);
    CHECK(entry_gap(jb.matrix * m.entries * ja.matrix.adjoint(), mt.entries) <
          1e-9);
  }
}

TEST_CASE("interior rank-one of type (a) on monomial spaces") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  auto [s, m] = rank_one_interior_a(z2, z2, DiskPoint(cplx(0.0)));
  for (cplx z : {std::polar(1.0, 0.4), std::polar(1.0, 1.9)})
    CHECK(std::abs(s.boundary_value(z) - z) < 1e-13);  // symbol is z
  Eigen::MatrixXcd expected(2, 2);
  expected << 0.0, 0.0, 1.0, 0.0;
  CHECK(entry_gap(m.entries, expected) < 1e-11);

  BlaschkeProduct z3 = BlaschkeProduct::monomial(3);
  auto [s2, m2] = rank_one_interior_a(z2, z3, DiskPoint(cplx(0.0)));
  for (cplx z : {std::polar(1.0, 0.4)})
    CHECK(std::abs(s2.boundary_value(z) - z * z) < 1e-13);  // symbol is z^2
  AttoMatrix op =
      outer_product(atto::conjugate_kernel(ModelSpaceBasis(z3), cplx(0.0)),
                    atto::kernel(ModelSpaceBasis(z2), cplx(0.0)));
  CHECK(entry_gap(m2.entries, op.entries) < 1e-11);
}

TEST_CASE("interior rank-one of type (b) on monomial spaces") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  auto [s, m] = rank_one_interior_b(z2, z2, DiskPoint(cplx(0.0)));
  for (cplx z : {std::polar(1.0, 0.7)})
    CHECK(std::abs(s.boundary_value(z) - std::conj(z)) < 1e-13);
  Eigen::MatrixXcd expected(2, 2);
  expected << 0.0, 1.0, 0.0, 0.0;
  CHECK(entry_gap(m.entries, expected) < 1e-11);
}

TEST_CASE("interior rank-one operators match their outer products") {
  atto::InstanceRng rng(149);
  for (int t = 0; t < 10; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 5);
    BlaschkeProduct beta = rng.blaschke(1, 5);
    DiskPoint w(t == 0 ? cplx(0.37, 0.1) : rng.disk(0.7));
    ModelSpaceBasis ab(alpha), bb(beta);

    auto [sa, ma] = rank_one_interior_a(alpha, beta, w);
    AttoMatrix opa = outer_product(atto::conjugate_kernel(bb, w),
                                   atto::kernel(ab, w));
    CHECK(entry_gap(ma.entries, opa.entries) < 1e-9);

    auto [sb, mb] = rank_one_interior_b(alpha, beta, w);
    AttoMatrix opb = outer_product(atto::kernel(bb, w),
                                   atto::conjugate_kernel(ab, w));
    CHECK(entry_gap(mb.entries, opb.entries) < 1e-9);

    // (b) is the adjoint of (a) with the spaces swapped.
    auto [ss, ms] = rank_one_interior_a(beta, alpha, w);
    CHECK(entry_gap(mb.entries, adjoint_matrix(ms).entries) < 1e-9);
  }
}

TEST_CASE("boundary rank-one on K_{z^2} and K_z") {
  BlaschkeProduct z2 = BlaschkeProduct::monomial(2);
  auto [s, m] = rank_one_boundary(z2, z2, BoundaryPoint(cplx(1.0)));
  Eigen::MatrixXcd expected(2, 2);
  expected << 1.0, 1.0, 1.0, 1.0;
  CHECK(entry_gap(m.entries, expected) < 1e-10);

  BlaschkeProduct z1 = BlaschkeProduct::monomial(1);
  auto [s1, m1] = rank_one_boundary(z1, z1, BoundaryPoint(cplx(1.0)));
  CHECK(std::abs(m1.entries(0, 0) - cplx(1.0)) < 1e-11);
}

TEST_CASE("boundary rank-one matches outer products of boundary kernels") {
  atto::InstanceRng rng(151);
  for (int t = 0; t < 10; ++t) {
    BlaschkeProduct alpha = rng.blaschke(1, 4);
    BlaschkeProduct beta = rng.blaschke(1, 4);
    BoundaryPoint eta(rng.unit());
    auto [s, m] = rank_one_boundary(alpha, beta, eta);
    AttoMatrix op = outer_product(atto::kernel(ModelSpaceBasis(beta), eta),
                                  atto::kernel(ModelSpaceBasis(alpha), eta));
    CHECK(entry_gap(m.entries, op.entries) < 1e-8);
  }
}

TEST_CASE("boundary rank-one is the radial limit of interior ones") {
  atto::InstanceRng rng(157);
  ModelSpaceBasis ab(rng.blaschke(1, 4));
  ModelSpaceBasis bb(rng.blaschke(1, 4));
  cplx eta = rng.unit();
  AttoMatrix limit = outer_product(atto::kernel(bb, BoundaryPoint(eta)),
                                   atto::kernel(ab, BoundaryPoint(eta)));
  double prev = 1e300;
  for (double r : {0.9, 0.99, 0.999}) {
    AttoMatrix approx =
        outer_product(atto::kernel(bb, r * eta), atto::kernel(ab, r * eta));
    double dev = entry_gap(approx.entries, limit.entries);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("outer products have rank one") {
  atto::InstanceRng rng(163);
  ModelSpaceBasis ab(rng.blaschke(2, 5));
  ModelSpaceBasis bb(rng.blaschke(2, 5));

  Eigen::VectorXcd u1(bb.dim()), v1(ab.dim());
  u1.setZero();
  v1.setZero();
  u1(0) = 1.0;
  v1(0) = 1.0;
  AttoMatrix e11 = outer_product(atto::ModelSpaceElement(bb, u1),
                                 atto::ModelSpaceElement(ab, v1));
  CHECK(std::abs(e11.entries(0, 0) - cplx(1.0)) < 1e-15);
  CHECK(e11.entries.cwiseAbs().sum() == Catch::Approx(1.0));

  AttoMatrix zero = outer_product(atto::ModelSpaceElement::zero(bb),
                                  rng.element(ab));
  CHECK(zero.operator_norm() < 1e-15);

  AttoMatrix r1 = outer_product(rng.element(bb), rng.element(ab));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r1.entries);
  if (svd.singularValues().size() > 1)
    CHECK(svd.singularValues()(1) < 1e-12);
}
