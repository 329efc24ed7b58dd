#pragma once

#include <Eigen/Dense>

#include "hweyl/exponent.hpp"
#include "hweyl/group.hpp"

namespace hweyl {

/// A complex function on the phase space G x G^, stored in
/// enumerate_phase_space order (index = element * |G| + character).
class PhaseFunction {
 public:
  /// Zero function.
  explicit PhaseFunction(FiniteAbelianGroup group);
  /// Throws DimensionMismatch on a length other than |G|^2 and DomainError on
  /// non-finite entries.
  PhaseFunction(FiniteAbelianGroup group, Eigen::VectorXcd values);

  static PhaseFunction constant(const FiniteAbelianGroup& group, cplx value);
  /// value at one phase point, zero elsewhere.
  static PhaseFunction delta(const FiniteAbelianGroup& group, std::size_t phase, cplx value = 1.0);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const Eigen::VectorXcd& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }

  cplx operator[](std::size_t phase) const noexcept { return values_[static_cast<Eigen::Index>(phase)]; }
  cplx at(std::size_t element, std::size_t character) const noexcept {
    return (*this)[group_.phase_index(element, character)];
  }

  PhaseFunction operator+(const PhaseFunction& other) const;
  PhaseFunction operator-(const PhaseFunction& other) const;
  PhaseFunction operator*(cplx s) const;
  /// Pointwise product.
  PhaseFunction pointwise(const PhaseFunction& other) const;

 private:
  FiniteAbelianGroup group_;
  Eigen::VectorXcd values_;
};

/// An operator on L^2(G) (counting measure) as a |G| x |G| matrix; row and
/// column indices follow element enumeration.
class WeylOperator {
 public:
  explicit WeylOperator(FiniteAbelianGroup group);
  /// Throws DimensionMismatch unless the matrix is |G| x |G|.
  WeylOperator(FiniteAbelianGroup group, Eigen::MatrixXcd matrix);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

  WeylOperator operator*(const WeylOperator& other) const;

 private:
  FiniteAbelianGroup group_;
  Eigen::MatrixXcd matrix_;
};

enum class TransformPath { direct, fft };

/// Schroedinger representation at (x, chi):  (rho phi)(y) = chi(y) phi(x^{-1} y).
/// Unitary, one nonzero entry per column, and
/// rho(x,chi) rho(x',chi') = conj(chi'(x)) rho(x x', chi chi').
WeylOperator schrodinger_rep(const PhasePoint& point);
Eigen::MatrixXcd schrodinger_matrix(const FiniteAbelianGroup& group, std::size_t phase);

/// W(f) = sum_w f(w) rho(w) w_phase.
///
/// The fft path evaluates, for every shift x, the column contributions by an
/// inverse character transform over chi; the direct path is the literal sum.
WeylOperator weyl_transform(const PhaseFunction& f, TransformPath path = TransformPath::fft);

/// f(w) = trace(rho(w)^* A). Exact inverse of weyl_transform.
PhaseFunction weyl_inverse(const WeylOperator& op, TransformPath path = TransformPath::fft);

/// Unweighted synthesis sum_w c(w) rho(w) for raw coefficients in phase order.
Eigen::MatrixXcd weyl_synthesis(const FiniteAbelianGroup& group, const Eigen::VectorXcd& coeffs);

/// ||f||_{L^p(m)} with m the Haar measure on G x G^.
double lp_norm(const PhaseFunction& f, Exponent p);

/// Singular values of `m`, descending, with entries below 1e-12 * max set to 0.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

/// l^p norm of the singular values (p = inf gives the operator norm).
double schatten_norm(const Eigen::MatrixXcd& m, Exponent p);
double schatten_norm(const WeylOperator& op, Exponent p);

/// ||f||_{L^p} - ||W(f)||_{S_p'} for p in [1, 2]. Nonnegative up to rounding.
double hausdorff_young_margin(const PhaseFunction& f, double p);

}  // namespace hweyl
