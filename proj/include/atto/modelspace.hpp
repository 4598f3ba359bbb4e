// Model spaces K_alpha of finite Blaschke products in coefficient form.
//
// The Takenaka-Malmquist functions built from the ordered zeros a_1..a_n,
//
//   e_k(z) = sqrt(1-|a_k|^2)/(1 - conj(a_k) z) * prod_{j<k} m_j(z),
//   m_j(z) = (z - a_j)/(1 - conj(a_j) z),
//
// form an orthonormal basis of K_alpha, so every element is a coefficient
// vector of length deg(alpha) and all operators become dense matrices.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <utility>

#include <Eigen/Dense>

#include "atto/blaschke.hpp"
#include "atto/quadrature.hpp"

namespace atto {

class ModelSpaceBasis {
 public:
  explicit ModelSpaceBasis(BlaschkeProduct alpha) : alpha_(std::move(alpha)) {}

  const BlaschkeProduct& alpha() const { return alpha_; }
  int dim() const { return alpha_.degree(); }

  /// Values e_1(z)..e_n(z) by one running Mobius product.
  Eigen::VectorXcd eval_all(cplx z) const {
    const auto& a = alpha_.zeros();
    Eigen::VectorXcd e(dim());
    cplx running(1.0);
    for (int k = 0; k < dim(); ++k) {
      cplx ak = a[static_cast<std::size_t>(k)];
      cplx den = cplx(1.0) - std::conj(ak) * z;
      e(k) = std::sqrt(1.0 - std::norm(ak)) / den * running;
      running *= (z - ak) / den;
    }
    return e;
  }

  cplx eval(int k, cplx z) const { return eval_all(z)(k); }

  /// Values (C_alpha e_1)(w)..(C_alpha e_n)(w).  On |z|=1 every Mobius
  /// factor is unimodular, which collapses C_alpha e_k to the analytic
  /// function c * sqrt(1-|a_k|^2)/(1 - conj(a_k) z) * prod_{j>k} m_j(z);
  /// that form evaluates anywhere on the closed disk.
  Eigen::VectorXcd conj_basis_eval_all(cplx w) const {
    const auto& a = alpha_.zeros();
    Eigen::VectorXcd e(dim());
    cplx running(1.0);
    for (int k = dim() - 1; k >= 0; --k) {
      cplx ak = a[static_cast<std::size_t>(k)];
      cplx den = cplx(1.0) - std::conj(ak) * w;
      e(k) = alpha_.constant() * std::sqrt(1.0 - std::norm(ak)) / den * running;
      running *= (w - ak) / den;
    }
    return e;
  }

  bool operator==(const ModelSpaceBasis& o) const {
    return alpha_.constant() == o.alpha_.constant() &&
           alpha_.zeros() == o.alpha_.zeros();
  }

 private:
  BlaschkeProduct alpha_;
};

/// Element of K_alpha as a coefficient vector over the basis above.
class ModelSpaceElement {
 public:
  ModelSpaceElement(ModelSpaceBasis basis, Eigen::VectorXcd coeffs)
      : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.dim())
      throw BasisMismatch("coefficient count does not match basis dimension");
  }

  static ModelSpaceElement zero(const ModelSpaceBasis& basis) {
    return ModelSpaceElement(basis, Eigen::VectorXcd::Zero(basis.dim()));
  }

  const ModelSpaceBasis& basis() const { return basis_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

  cplx operator()(cplx z) const {
    return basis_.eval_all(z).cwiseProduct(coeffs_).sum();
  }

  double norm() const { return coeffs_.norm(); }

  friend ModelSpaceElement operator+(const ModelSpaceElement& u,
                                     const ModelSpaceElement& v) {
    if (!(u.basis_ == v.basis_))
      throw BasisMismatch("sum of elements over different model spaces");
    return ModelSpaceElement(u.basis_, u.coeffs_ + v.coeffs_);
  }

  friend ModelSpaceElement operator-(const ModelSpaceElement& u,
                                     const ModelSpaceElement& v) {
    if (!(u.basis_ == v.basis_))
      throw BasisMismatch("difference of elements over different model spaces");
    return ModelSpaceElement(u.basis_, u.coeffs_ - v.coeffs_);
  }

  friend ModelSpaceElement operator*(cplx s, const ModelSpaceElement& u) {
    return ModelSpaceElement(u.basis_, s * u.coeffs_);
  }

 private:
  ModelSpaceBasis basis_;
  Eigen::VectorXcd coeffs_;
};

/// <u, v> = sum u_k conj(v_k).
inline cplx inner_product(const ModelSpaceElement& u,
                          const ModelSpaceElement& v) {
  if (!(u.basis() == v.basis()))
    throw BasisMismatch("inner product of elements over different model spaces");
  return v.coeffs().dot(u.coeffs());  // Eigen dot conjugates its receiver
}

/// Reproducing kernel at w, |w| <= 1: coefficients conj(e_k(w)).  Boundary
/// points are always admissible for finite Blaschke products.
inline ModelSpaceElement kernel(const ModelSpaceBasis& basis, cplx w) {
  if (std::abs(w) > 1.0 + kUnimodularTol)
    throw InvariantViolation("kernel point outside the closed disk");
  return ModelSpaceElement(basis, basis.eval_all(w).conjugate());
}

inline ModelSpaceElement kernel(const ModelSpaceBasis& basis, DiskPoint w) {
  return kernel(basis, w.value());
}

inline ModelSpaceElement kernel(const ModelSpaceBasis& basis, BoundaryPoint w) {
  return kernel(basis, w.value());
}

/// Conjugate kernel (alpha(z) - alpha(w))/(z - w): coefficient k of the
/// expansion is (C_alpha e_k)(w).
inline ModelSpaceElement conjugate_kernel(const ModelSpaceBasis& basis, cplx w) {
  if (std::abs(w) > 1.0 + kUnimodularTol)
    throw InvariantViolation("kernel point outside the closed disk");
  return ModelSpaceElement(basis, basis.conj_basis_eval_all(w));
}

inline ModelSpaceElement conjugate_kernel(const ModelSpaceBasis& basis,
                                          DiskPoint w) {
  return conjugate_kernel(basis, w.value());
}

inline ModelSpaceElement conjugate_kernel(const ModelSpaceBasis& basis,
                                          BoundaryPoint w) {
  return conjugate_kernel(basis, w.value());
}

/// Matrix of the conjugation C_alpha f = alpha conj(z) conj(f) over the
/// basis; acts antilinearly as coeffs -> M conj(coeffs).
struct ConjugationMatrix {
  ModelSpaceBasis basis;
  Eigen::MatrixXcd matrix;

  ModelSpaceElement apply(const ModelSpaceElement& f) const {
    if (!(f.basis() == basis))
      throw BasisMismatch("conjugation applied across model spaces");
    return ModelSpaceElement(basis, matrix * f.coeffs().conjugate());
  }
};

/// Entries M_jk = <C_alpha e_k, e_j> by circle quadrature.
inline ConjugationMatrix conjugation_matrix(const ModelSpaceBasis& basis,
                                            const QuadratureOptions& opt = {}) {
  const int n = basis.dim();
  const BlaschkeProduct& alpha = basis.alpha();
  auto f = [&](cplx z) -> Eigen::MatrixXcd {
    Eigen::VectorXcd ec = basis.eval_all(z).conjugate();
    cplx scale = alpha(z) * std::conj(z);
    return scale * (ec * ec.transpose());
  };
  Eigen::MatrixXcd m = circle_mean_matrix(n, n, f, opt);
  double unit = (m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n))
                    .cwiseAbs()
                    .maxCoeff();
  if (unit > 1e-9)
    throw QuadratureNotConverged("conjugation matrix unitarity defect " +
                                 sci(unit));
  return ConjugationMatrix{basis, std::move(m)};
}

/// Orthogonal projection onto K_alpha of a boundary function: coefficients
/// <f, e_k> by circle quadrature.
inline ModelSpaceElement project(const ModelSpaceBasis& basis,
                                 const std::function<cplx(cplx)>& f,
                                 const QuadratureOptions& opt = {}) {
  auto integrand = [&](cplx z) -> Eigen::MatrixXcd {
    return f(z) * basis.eval_all(z).conjugate();
  };
  Eigen::MatrixXcd c = circle_mean_matrix(basis.dim(), 1, integrand, opt);
  return ModelSpaceElement(basis, c.col(0));
}

}  // namespace atto
