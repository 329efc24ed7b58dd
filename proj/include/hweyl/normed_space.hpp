#pragma once

#include <Eigen/Dense>
#include <string>

#include "hweyl/exponent.hpp"
#include "hweyl/group.hpp"

namespace hweyl {

enum class ScalarField { real, complex };

std::string to_string(ScalarField field);
ScalarField scalar_field_from_string(const std::string& name);

/// The finite-dimensional Banach space l^q_d over R or C.
///
/// Vectors are always stored as complex arrays; over the reals the imaginary
/// parts are zero. The dual pairing is <v, x*> = sum_j v_j conj(x*_j) and the
/// dual space is l^{q'}_d.
class NormedSpace {
 public:
  /// Throws DomainError when dim < 1.
  NormedSpace(int dim, ScalarField field, Exponent q);

  static NormedSpace euclidean(int dim, ScalarField field = ScalarField::real) {
    return NormedSpace(dim, field, Exponent(2.0));
  }

  int dim() const noexcept { return dim_; }
  ScalarField field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == ScalarField::real; }
  Exponent q() const noexcept { return q_; }
  Exponent dual_q() const { return q_.conjugate(); }

  double norm(const Eigen::Ref<const Eigen::VectorXcd>& v) const;
  double dual_norm(const Eigen::Ref<const Eigen::VectorXcd>& x) const;

  /// A unit functional with <v, x*> = ||v|| (zero vector maps to a unit basis functional).
  Eigen::VectorXcd norming_functional(const Eigen::Ref<const Eigen::VectorXcd>& v) const;

  /// Throws DimensionMismatch on wrong length, DomainError on a nonzero imaginary
  /// part over the reals or a non-finite entry.
  void validate(const Eigen::Ref<const Eigen::VectorXcd>& v, const char* what) const;

  friend bool operator==(const NormedSpace& a, const NormedSpace& b) noexcept {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.q_ == b.q_;
  }

 private:
  int dim_;
  ScalarField field_;
  Exponent q_;
};

/// l^q norm of a coordinate vector.
double lq_norm(const Eigen::Ref<const Eigen::VectorXcd>& v, Exponent q);

/// A functional x* in X* = l^{q'}_d.
class DualFunctional {
 public:
  DualFunctional(const NormedSpace& space, Eigen::VectorXcd coeffs);
  static DualFunctional zero(const NormedSpace& space);

  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  int dim() const noexcept { return static_cast<int>(coeffs_.size()); }

  /// <v, x*> = sum_j v_j conj(x*_j).
  cplx pair(const Eigen::Ref<const Eigen::VectorXcd>& v) const { return coeffs_.dot(v); }

 private:
  Eigen::VectorXcd coeffs_;
};

}  // namespace hweyl
