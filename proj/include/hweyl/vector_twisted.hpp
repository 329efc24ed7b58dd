#pragma once

#include <Eigen/Dense>

#include "hweyl/twisted.hpp"
#include "hweyl/vector_measure.hpp"
#include "hweyl/vector_weyl.hpp"

namespace hweyl {

/// An X-valued function on G x G^, one d-vector per phase point (rows of `values`).
class VectorPhaseField {
 public:
  VectorPhaseField(FiniteAbelianGroup group, NormedSpace space, Eigen::MatrixXcd values);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const NormedSpace& space() const noexcept { return space_; }
  const Eigen::MatrixXcd& values() const noexcept { return values_; }
  Eigen::VectorXcd operator[](std::size_t phase) const {
    return values_.row(static_cast<Eigen::Index>(phase)).transpose();
  }

  /// <phi, x*> pointwise.
  PhaseFunction pair(const DualFunctional& xstar) const;
  /// The measure with atoms phi(w) w_phase, i.e. d(measure) = phi dm.
  VectorMeasure as_density() const;

 private:
  FiniteAbelianGroup group_;
  NormedSpace space_;
  Eigen::MatrixXcd values_;
};

/// A complex measure on G x G^ given by its atom masses.
class ScalarMeasure {
 public:
  ScalarMeasure(FiniteAbelianGroup group, Eigen::VectorXcd atoms);
  /// mu_f: atoms f(w) w_phase.
  static ScalarMeasure from_density(const PhaseFunction& f);
  static ScalarMeasure point_mass(const FiniteAbelianGroup& group, std::size_t phase, cplx mass = 1.0);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const Eigen::VectorXcd& atoms() const noexcept { return atoms_; }
  double total_variation() const { return atoms_.cwiseAbs().sum(); }

 private:
  FiniteAbelianGroup group_;
  Eigen::VectorXcd atoms_;
};

/// f x_nu g (x*) = f x (g h_{x*}).
PhaseFunction tconv_nu_weak(const PhaseFunction& f, const PhaseFunction& g, const VectorMeasure& nu,
                            const DualFunctional& xstar);

/// (f x^nu g)(x,chi) = sum_{w'} f(x x'^{-1}, chi chi'^{-1}) g(w') conj(chi'(x)) chi'(x') v_{w'}.
VectorPhaseField tconv_nu_vector(const PhaseFunction& f, const PhaseFunction& g, const VectorMeasure& nu);

/// (mu x nu)(A) = sum over w w' in A of mu_w conj(chi'(x)) v_{w'}.
VectorMeasure measure_tconv(const ScalarMeasure& mu, const VectorMeasure& nu);

/// Density of f x nu with respect to m: sum_{w'} (T^t_{w'} f)(w) v_{w'}.
VectorPhaseField fn_measure_tconv(const PhaseFunction& f, const VectorMeasure& nu);

/// ||phi||_{P_p} = sup_{x* in B_X*} ||<phi, x*>||_{L^p(m)}. Exact for d = 1
/// and p = inf; otherwise a bracket from the ascent and the dual net.
Estimate pp_norm_of_field(const VectorPhaseField& field, Exponent p, const SearchConfig& cfg = {});

struct VectorYoungMargin {
  /// right side minus left side of the inequality, from the reported estimates
  double margin = 0.0;
  /// 1e-10 scale plus the widths of the optimizer brackets involved
  double tolerance = 0.0;
  double bracket_width = 0.0;
  double scale = 0.0;
  bool holds() const noexcept { return margin >= -tolerance; }
};

/// ||f||_p ||nu|| - ||f x nu||_{P_p}.
VectorYoungMargin pp_contraction_margin(const PhaseFunction& f, const VectorMeasure& nu, Exponent p,
                                        const SearchConfig& cfg = {});

/// ||f||_q ||nu||_{p,m} - ||f x nu||_{P_r}, 1/p + 1/q = 1 + 1/r.
/// Throws DomainError unless 1 < p < inf and 1/p + 1/q > 1.
VectorYoungMargin young_vvyi_margin(const PhaseFunction& f, const VectorMeasure& nu, Exponent p, Exponent q,
                                    const SearchConfig& cfg = {});

/// Relative Frobenius deviation between W(f x_nu g (x*)) and W(f) W^nu(g)(x*).
double weyl_tconv_identity_check(const PhaseFunction& f, const PhaseFunction& g, const VectorMeasure& nu,
                                 const DualFunctional& xstar);

}  // namespace hweyl
