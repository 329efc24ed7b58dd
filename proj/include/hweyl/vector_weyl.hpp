#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hweyl/vector_measure.hpp"
#include "hweyl/weyl.hpp"

namespace hweyl {

/// An element of B(L^2(G)) (x) X for X = K^d, stored as coordinate matrices:
/// sum_j A_j (x) e_j.
class VectorWeylOperator {
 public:
  VectorWeylOperator(FiniteAbelianGroup group, std::vector<Eigen::MatrixXcd> coords);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  const std::vector<Eigen::MatrixXcd>& coord_matrices() const noexcept { return coords_; }
  const Eigen::MatrixXcd& coord(int j) const { return coords_.at(static_cast<std::size_t>(j)); }

  /// sum_j conj(x*_j) A_j, i.e. (id (x) x*) applied to the tensor.
  WeylOperator scalarize(const DualFunctional& xstar) const;
  /// Largest entry modulus over all coordinate matrices.
  double max_abs() const;

 private:
  FiniteAbelianGroup group_;
  std::vector<Eigen::MatrixXcd> coords_;
};

/// W^nu(f) = int f rho dnu: A_j = sum_w f(w) (v_w)_j rho(w). No Haar weight;
/// the measure carries its own mass (unlike weyl_transform).
VectorWeylOperator weyl_nu(const PhaseFunction& f, const VectorMeasure& nu);

/// W^nu(f)(x*) = W(f h_{x*}).
WeylOperator weyl_nu_weak(const PhaseFunction& f, const VectorMeasure& nu, const DualFunctional& xstar);

/// W(nu) = int rho dnu = W^nu(1).
VectorWeylOperator weyl_of_measure(const VectorMeasure& nu);

/// True iff W^nu(f) vanishes (entries within 1e-10 (1 + max|f| max|v|)).
bool kernel_support_test(const VectorMeasure& nu, const PhaseFunction& f);

/// A concrete operator space X = span{B_1..B_d} inside the r x r matrices.
class MatrixPresentation {
 public:
  /// Throws DimensionMismatch on ragged or non-square bases and DomainError on
  /// a linearly dependent family.
  explicit MatrixPresentation(std::vector<Eigen::MatrixXcd> basis);
  /// All of M_r, presented by the matrix units in column-major order.
  static MatrixPresentation full(int r);

  int size() const noexcept { return r_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Eigen::MatrixXcd>& basis() const noexcept { return basis_; }

  /// sum_j c_j B_j.
  Eigen::MatrixXcd compose(const Eigen::Ref<const Eigen::VectorXcd>& c) const;
  /// True iff m lies in the span (relative residual <= tol).
  bool contains(const Eigen::MatrixXcd& m, double tol = 1e-10) const;

 private:
  std::vector<Eigen::MatrixXcd> basis_;
  Eigen::MatrixXcd vec_basis_;  // r^2 x d
  int r_ = 0;
};

/// A function on G x G^ with values in M_r.
class VectorPhaseFunction {
 public:
  /// Throws DimensionMismatch unless there are |G|^2 square values of equal size.
  VectorPhaseFunction(FiniteAbelianGroup group, std::vector<Eigen::MatrixXcd> values);
  /// F(w) = sum_j coords(w, j) B_j.
  static VectorPhaseFunction from_coordinates(const FiniteAbelianGroup& group, const MatrixPresentation& pres,
                                              const Eigen::MatrixXcd& coords);
  /// F(w) = f(w) I_r.
  static VectorPhaseFunction scalar(const PhaseFunction& f, int r);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  int size() const noexcept { return r_; }
  const std::vector<Eigen::MatrixXcd>& values() const noexcept { return values_; }
  const Eigen::MatrixXcd& operator[](std::size_t phase) const { return values_[phase]; }

 private:
  FiniteAbelianGroup group_;
  std::vector<Eigen::MatrixXcd> values_;
  int r_ = 0;
};

/// sum_w rho(w) (x) F(w) w_phase as an (|G| r) x (|G| r) matrix; block (y', y)
/// is the r x r coefficient of the matrix unit e_{y'} e_y^*.
/// Throws DimensionMismatch when a value is not in the presented space.
Eigen::MatrixXcd vector_weyl_transform(const VectorPhaseFunction& F, const MatrixPresentation& pres);

/// ||F||_{L^p(m; S_p')} - ||W (x) id (F)||_{S_p'} for p in [1, 2].
double vv_hausdorff_young_margin(const VectorPhaseFunction& F, double p);

/// A linear map T : M_r -> M_s, stored as its action on column-major vectorizations.
class MatrixMap {
 public:
  MatrixMap(int r, int s, Eigen::MatrixXcd action);
  static MatrixMap identity(int r);
  static MatrixMap transpose(int r);

  int domain_size() const noexcept { return r_; }
  int codomain_size() const noexcept { return s_; }
  const Eigen::MatrixXcd& action() const noexcept { return action_; }

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& m) const;
  /// Adjoint with respect to the trace inner product.
  MatrixMap adjoint() const;
  /// T^(k) applied blockwise to a (k r) x (k r) matrix.
  Eigen::MatrixXcd amplify(const Eigen::MatrixXcd& x, int k) const;

 private:
  int r_, s_;
  Eigen::MatrixXcd action_;
};

/// A lower bound on ||T||_cb: the best ||T^(j)(X)|| over unit-norm inputs X
/// in M_j(M_r), j = 1..k, drawn at random and improved by a monotone ascent.
/// Nondecreasing in both k and samples (samples are prefix-stable per level).
double amplification_lower_bound(const MatrixMap& T, int k, std::size_t samples, std::uint64_t seed = 1);

}  // namespace hweyl
