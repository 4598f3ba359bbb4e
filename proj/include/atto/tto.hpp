// Asymmetric truncated Toeplitz operators as dense matrices, Crofoot
// conjugation with symbol transport, and rank-one constructions.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "atto/modelspace.hpp"
#include "atto/symbol.hpp"

namespace atto {

/// Matrix of A_phi: K_alpha -> K_beta, f -> P_beta(phi f), over the
/// Takenaka-Malmquist bases.  entries(j, k) = <phi e_k^alpha, e_j^beta>.
struct AttoMatrix {
  BlaschkeProduct alpha;
  BlaschkeProduct beta;
  Eigen::MatrixXcd entries;

  /// Largest singular value.
  double operator_norm() const {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(entries).singularValues()(0);
  }
};

inline AttoMatrix atto_matrix(const ModelSpaceBasis& alpha_basis,
                              const ModelSpaceBasis& beta_basis,
                              const Symbol& s,
                              const QuadratureOptions& opt = {}) {
  auto f = [&](cplx z) -> Eigen::MatrixXcd {
    Eigen::VectorXcd ea = alpha_basis.eval_all(z);
    Eigen::VectorXcd ebc = beta_basis.eval_all(z).conjugate();
    return s.boundary_value(z) * (ebc * ea.transpose());
  };
  Eigen::MatrixXcd m =
      circle_mean_matrix(beta_basis.dim(), alpha_basis.dim(), f, opt);
  return AttoMatrix{alpha_basis.alpha(), beta_basis.alpha(), std::move(m)};
}

inline AttoMatrix atto_matrix(const BlaschkeProduct& alpha,
                              const BlaschkeProduct& beta, const Symbol& s,
                              const QuadratureOptions& opt = {}) {
  return atto_matrix(ModelSpaceBasis(alpha), ModelSpaceBasis(beta), s, opt);
}

/// Conjugate transpose; represents A_{conj(psi)+chi}: K_beta -> K_alpha
/// when the input is A_{conj(chi)+psi}.
inline AttoMatrix adjoint_matrix(const AttoMatrix& m) {
  return AttoMatrix{m.beta, m.alpha, m.entries.adjoint()};
}

/// Rank-one map f -> <f, v> u as a matrix; u lives in the target space.
inline AttoMatrix outer_product(const ModelSpaceElement& u,
                                const ModelSpaceElement& v) {
  return AttoMatrix{v.basis().alpha(), u.basis().alpha(),
                    u.coeffs() * v.coeffs().adjoint()};
}

/// Unitary J_w: K_alpha -> K_{alpha_w}, f -> sqrt(1-|w|^2)/(1-conj(w) alpha) f,
/// in coordinates.
struct CrofootOperator {
  ModelSpaceBasis source;
  ModelSpaceBasis target;
  Eigen::MatrixXcd matrix;

  ModelSpaceElement apply(const ModelSpaceElement& f) const {
    if (!(f.basis() == source))
      throw BasisMismatch("Crofoot operator applied to a foreign element");
    return ModelSpaceElement(target, matrix * f.coeffs());
  }

  /// The inverse (= adjoint) carries K_{alpha_w} back onto K_alpha.
  ModelSpaceElement apply_inverse(const ModelSpaceElement& f) const {
    if (!(f.basis() == target))
      throw BasisMismatch("Crofoot inverse applied to a foreign element");
    return ModelSpaceElement(source, matrix.adjoint() * f.coeffs());
  }
};

inline CrofootOperator crofoot_operator(const BlaschkeProduct& alpha,
                                        DiskPoint w,
                                        const QuadratureOptions& opt = {}) {
  ModelSpaceBasis source(alpha);
  ModelSpaceBasis target(crofoot_target(alpha, w));
  const cplx wv = w.value();
  const double scale = std::sqrt(1.0 - std::norm(wv));
  auto f = [&](cplx z) -> Eigen::MatrixXcd {
    cplx jw = scale / (cplx(1.0) - std::conj(wv) * alpha(z));
    Eigen::VectorXcd es = source.eval_all(z);
    Eigen::VectorXcd etc = target.eval_all(z).conjugate();
    return jw * (etc * es.transpose());
  };
  Eigen::MatrixXcd m = circle_mean_matrix(target.dim(), source.dim(), f, opt);
  double defect = (m.adjoint() * m -
                   Eigen::MatrixXcd::Identity(source.dim(), source.dim()))
                      .cwiseAbs()
                      .maxCoeff();
  if (defect > 1e-8)
    throw QuadratureNotConverged("Crofoot matrix unitarity defect " +
                                 sci(defect));
  return CrofootOperator{std::move(source), std::move(target), std::move(m)};
}

/// Image of the kernel k_z^alpha under the kernel transform identity:
/// k_z^{alpha_w} = (1-|w|^2)/((1-w conj(alpha(z)))(1-conj(w) alpha)) k_z^alpha,
/// realized by projecting the right-hand side onto K_{alpha_w}.
inline ModelSpaceElement kernel_transform(const BlaschkeProduct& alpha,
                                          DiskPoint w, DiskPoint z,
                                          const QuadratureOptions& opt = {}) {
  ModelSpaceBasis source(alpha);
  ModelSpaceBasis target(crofoot_target(alpha, w));
  const cplx wv = w.value(), zv = z.value();
  ModelSpaceElement kz = kernel(source, zv);
  const cplx scalar =
      (1.0 - std::norm(wv)) / (cplx(1.0) - wv * std::conj(alpha(zv)));
  auto f = [&](cplx lam) {
    return scalar * kz(lam) / (cplx(1.0) - std::conj(wv) * alpha(lam));
  };
  return project(target, f, opt);
}

namespace detail {

/// Splits P/(Q_in Q_out) = A/Q_in + B/Q_out with deg A < deg Q_in by a
/// square Sylvester-style solve; Q_in has all roots strictly inside the
/// circle and Q_out strictly outside, so the system is nonsingular.
inline std::pair<Polynomial, Polynomial> split_by_circle(
    const Polynomial& p, const Polynomial& q_in, const Polynomial& q_out) {
  Polynomial pt = p.trimmed(1e-14);
  const int d_in = q_in.degree(), d_out = q_out.degree();
  const int rows = std::max(pt.degree() + 1, d_in + d_out);
  const int nb = rows - d_in;  // B has degree nb - 1
  Eigen::MatrixXcd sys = Eigen::MatrixXcd::Zero(rows, rows);
  for (int i = 0; i < d_in; ++i)
    for (int j = 0; j <= d_out; ++j)
      sys(i + j, i) = q_out.coeffs()[static_cast<std::size_t>(j)];
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j <= d_in; ++j)
      sys(i + j, d_in + i) = q_in.coeffs()[static_cast<std::size_t>(j)];
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
  for (int j = 0; j <= pt.degree(); ++j)
    rhs(j) = pt.coeffs()[static_cast<std::size_t>(j)];
  Eigen::VectorXcd x = sys.colPivHouseholderQr().solve(rhs);
  double misfit = (sys * x - rhs).cwiseAbs().maxCoeff();
  double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
  if (misfit > 1e-9 * scale)
    throw SplitFailure("partial-fraction split misfit " + sci(misfit));
  std::vector<cplx> a(static_cast<std::size_t>(d_in)),
      b(static_cast<std::size_t>(nb));
  for (int i = 0; i < d_in; ++i) a[static_cast<std::size_t>(i)] = x(i);
  for (int i = 0; i < nb; ++i) b[static_cast<std::size_t>(i)] = x(d_in + i);
  return {Polynomial(std::move(a)), Polynomial(std::move(b))};
}

}  // namespace detail

/// Symbol transport along Crofoot conjugation: the operator
/// J_b^beta A_phi (J_a^alpha)^{-1} equals A over (alpha_a, beta_b) with
/// symbol (1-conj(a) alpha)(1-b conj(beta)) phi / sqrt((1-|a|^2)(1-|b|^2)).
/// On the circle conj(beta) = 1/beta, so the product is rational in z; its
/// poles split into a known inside set (zeros of beta, reflected poles of
/// g_minus) and outside set (poles of alpha and g_plus), and the two-sided
/// partial-fraction split recovers normalized (g_plus, g_minus) parts.
inline Symbol transport_symbol(const BlaschkeProduct& alpha,
                               const BlaschkeProduct& beta, DiskPoint a,
                               DiskPoint b, const Symbol& s) {
  const cplx av = a.value(), bv = b.value();
  const double scale =
      std::sqrt((1.0 - std::norm(av)) * (1.0 - std::norm(bv)));

  Polynomial na = alpha.numerator(), da = alpha.denominator();
  Polynomial nb = beta.numerator(), db = beta.denominator();
  Polynomial out_factor = da - std::conj(av) * na;  // (1-conj(a)alpha) * da
  Polynomial in_factor = nb - bv * db;              // (1-b conj(beta)) * nb

  const Polynomial& u = s.g_plus().num();
  const Polynomial& v = s.g_plus().den();
  Polynomial pc = s.g_minus().num().conjugated();
  Polynomial qc = s.g_minus().den().conjugated();
  const int m = std::max(pc.degree(), qc.degree());
  Polynomial r = pc.reversed(m);  // conj(g_minus) = r/t on the circle
  Polynomial t = qc.reversed(m);

  Polynomial p = out_factor * in_factor * (u * t + r * v);
  Polynomial q_out = da * v;
  Polynomial q_in = nb * t;

  auto [a_part, b_part] = detail::split_by_circle(p, q_in, q_out);

  RationalAnalytic g_plus(cplx(1.0 / scale) * b_part, q_out, false);
  // Reflect A/Q_in through the circle to read off g_minus.
  const int d_in = q_in.degree();
  Polynomial gm_num = a_part.reversed(d_in).conjugated();
  Polynomial gm_den = q_in.reversed(d_in).conjugated();
  RationalAnalytic g_minus(cplx(1.0 / scale) * gm_num, gm_den, false);
  Symbol result(std::move(g_plus), std::move(g_minus));

  // The re-split must reproduce the product pointwise on the circle.
  double worst = 0.0, magnitude = 1.0;
  for (int k = 0; k < 64; ++k) {
    cplx z = std::polar(1.0, 2.0 * M_PI * k / 64.0 + 0.05);
    cplx direct = (cplx(1.0) - std::conj(av) * alpha(z)) *
                  (cplx(1.0) - bv * std::conj(beta(z))) * s.boundary_value(z) /
                  scale;
    worst = std::max(worst, std::abs(result.boundary_value(z) - direct));
    magnitude = std::max(magnitude, std::abs(direct));
  }
  if (worst > 1e-10 * magnitude)
    throw SplitFailure("transported symbol residue " + sci(worst) +
                       " on the circle");
  return result;
}

/// Rank-one operator conj-kernel(beta, w) (x) kernel(alpha, w) together with
/// its symbol beta(z)/(z - w) in normalized split form.
inline std::pair<Symbol, AttoMatrix> rank_one_interior_a(
    const BlaschkeProduct& alpha, const BlaschkeProduct& beta, DiskPoint w,
    const QuadratureOptions& opt = {}) {
  const cplx wv = w.value();
  RationalAnalytic g_plus = conjugate_kernel_rational(beta, wv);
  RationalAnalytic g_minus(Polynomial{cplx(0.0), std::conj(beta(wv))},
                           Polynomial{cplx(1.0), -std::conj(wv)}, false);
  Symbol s(std::move(g_plus), std::move(g_minus));
  AttoMatrix m = atto_matrix(alpha, beta, s, opt);
  return {std::move(s), std::move(m)};
}

/// Rank-one operator kernel(beta, w) (x) conj-kernel(alpha, w) with symbol
/// conj(alpha(z))/(conj(z) - conj(w)).
inline std::pair<Symbol, AttoMatrix> rank_one_interior_b(
    const BlaschkeProduct& alpha, const BlaschkeProduct& beta, DiskPoint w,
    const QuadratureOptions& opt = {}) {
  const cplx wv = w.value();
  RationalAnalytic g_plus(Polynomial{cplx(0.0), std::conj(alpha(wv))},
                          Polynomial{cplx(1.0), -std::conj(wv)}, false);
  RationalAnalytic g_minus = conjugate_kernel_rational(alpha, wv);
  Symbol s(std::move(g_plus), std::move(g_minus));
  AttoMatrix m = atto_matrix(alpha, beta, s, opt);
  return {std::move(s), std::move(m)};
}

/// Boundary rank-one kernel(beta, eta) (x) kernel(alpha, eta) with symbol
/// k_eta^beta + conj(k_eta^alpha) - 1; admissible at every boundary point
/// because finite Blaschke products have angular derivatives everywhere.
inline std::pair<Symbol, AttoMatrix> rank_one_boundary(
    const BlaschkeProduct& alpha, const BlaschkeProduct& beta,
    BoundaryPoint eta, const QuadratureOptions& opt = {}) {
  const cplx ev = eta.value();
  RationalAnalytic g_plus =
      kernel_rational(beta, ev) - RationalAnalytic::constant(cplx(1.0));
  RationalAnalytic g_minus = kernel_rational(alpha, ev);
  Symbol s(std::move(g_plus), std::move(g_minus));
  AttoMatrix m = atto_matrix(alpha, beta, s, opt);
  return {std::move(s), std::move(m)};
}

}  // namespace atto
