#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "hweyl/dual_ball.hpp"
#include "hweyl/normed_space.hpp"
#include "hweyl/weyl.hpp"

namespace hweyl {

/// A set of phase points, given by phase indices.
using PhaseSet = std::vector<std::size_t>;

/// Every phase point of G x G^.
PhaseSet full_phase_set(const FiniteAbelianGroup& group);

/// An X-valued measure on the power set of G x G^, determined by one atom
/// v_w in X per phase point: nu(A) = sum_{w in A} v_w. Every such measure is
/// sigma-additive, bounded, regular and absolutely continuous w.r.t. m.
class VectorMeasure {
 public:
  /// `atoms` is |G|^2 x d, row w = v_w in phase order.
  VectorMeasure(FiniteAbelianGroup group, NormedSpace space, Eigen::MatrixXcd atoms);
  static VectorMeasure zero(const FiniteAbelianGroup& group, const NormedSpace& space);
  /// Single atom v at one phase point.
  static VectorMeasure point_mass(const FiniteAbelianGroup& group, const NormedSpace& space,
                                  std::size_t phase, const Eigen::VectorXcd& v);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const NormedSpace& space() const noexcept { return space_; }
  const Eigen::MatrixXcd& atoms() const noexcept { return atoms_; }
  Eigen::VectorXcd atom(std::size_t phase) const {
    return atoms_.row(static_cast<Eigen::Index>(phase)).transpose();
  }

  /// nu(A).
  Eigen::VectorXcd operator()(const PhaseSet& set) const;
  /// nu_f: atoms f(w) v_w.
  VectorMeasure weighted(const PhaseFunction& f) const;

 private:
  FiniteAbelianGroup group_;
  NormedSpace space_;
  Eigen::MatrixXcd atoms_;
};

/// Search configuration shared by every supremum over the dual ball or over
/// unimodular coefficient families. All searches are deterministic given `seed`.
struct SearchConfig {
  std::uint64_t seed = 0x5eedULL;
  /// Largest |A| solved by exhaustive sign enumeration (real field).
  std::size_t sign_ceiling = 20;
  /// Largest |G|^2 for which the infinity-semivariation enumerates all subsets.
  std::size_t subset_ceiling = 16;
  /// Points in the dual-ball net used for upper brackets.
  std::size_t net_budget = 200000;
  /// Phases per atom in the complex unimodular search.
  int phase_grid = 16;
  /// Largest number of phase combinations searched exhaustively (complex field).
  std::size_t phase_combo_ceiling = std::size_t{1} << 20;
  /// Largest number of arrangement candidates for the exact real path above sign_ceiling.
  std::size_t arrangement_ceiling = 4000000;
  /// Multi-start count for ascent estimators.
  int starts = 32;
  int max_iterations = 2000;
  /// Allow heuristic estimators where no exhaustive/exact route fits the ceilings.
  bool estimator_opt_in = false;
};

/// sum_{w in A} |<v_w, x*>|.
double scalar_total_variation(const VectorMeasure& nu, const DualFunctional& xstar, const PhaseSet& set);

/// ||nu||(A) = sup_{x* in B_X*} |<nu, x*>|(A) = sup_{|theta_w| = 1} ||sum_{w in A} theta_w v_w||.
///
/// Real field: exact (Gray-code sign enumeration up to sign_ceiling atoms,
/// zonotope-vertex enumeration above). Complex field: unimodular search on a
/// phase grid (lower bound) bracketed by the dual-net upper bound.
/// Throws CeilingExceeded when no exact/exhaustive route fits and
/// estimator_opt_in is false.
Estimate semivariation(const VectorMeasure& nu, const PhaseSet& set, const SearchConfig& cfg = {});
/// ||nu|| = ||nu||(G x G^).
Estimate semivariation(const VectorMeasure& nu, const SearchConfig& cfg = {});

/// Dual-side bracket of the semivariation from the net alone.
Estimate semivariation_dual_bracket(const VectorMeasure& nu, const PhaseSet& set,
                                    const SearchConfig& cfg = {});

/// Exhaustive sign enumeration for real atoms (rows of `atoms`); the oracle
/// for the exact real route. Throws CeilingExceeded above 30 atoms.
double sign_enumeration_sup(const Eigen::MatrixXcd& atoms, const NormedSpace& space);

/// Exact real supremum over sign patterns via the vertices of the zonotope
/// sum_w [-v_w, v_w] (cells of the arrangement {x : <v_w, x> = 0}).
double zonotope_vertex_sup(const Eigen::MatrixXcd& atoms, const NormedSpace& space);

/// ||nu||_{p,m} = sup { ||sum_w alpha_w v_w|| : sum_w |alpha_w|^{p'} w_phase <= 1 }, and for
/// p = inf, sup_{m(A)>0} ||nu(A)|| / m(A).
Estimate p_semivariation(const VectorMeasure& nu, Exponent p, const SearchConfig& cfg = {});

/// Multi-start dual-pairing ascent for ||nu||_{p,m} (p < inf); a lower bound.
double p_semivariation_ascent(const VectorMeasure& nu, Exponent p, const SearchConfig& cfg = {});

/// Dual-net bracket of ||nu||_{p,m} = sup_{x*} ||h_{x*}||_{L^p(m)} (p < inf).
Estimate p_semivariation_dual_bracket(const VectorMeasure& nu, Exponent p, const SearchConfig& cfg = {});

/// ||f||_{nu,p} = || |f|^p ||_nu^{1/p}; p = 1 gives ||f||_nu.
Estimate lp_nu_norm(const PhaseFunction& f, const VectorMeasure& nu, Exponent p,
                    const SearchConfig& cfg = {});

/// int_A f dnu = sum_{w in A} f(w) v_w.
Eigen::VectorXcd integrate(const PhaseFunction& f, const VectorMeasure& nu, const PhaseSet& set);

/// Density h_{x*} of <nu, x*> w.r.t. m: h(w) = <v_w, x*> / w_phase.
PhaseFunction radon_nikodym(const VectorMeasure& nu, const DualFunctional& xstar);

/// True iff every atom in A vanishes (every subset of A has measure zero).
bool nu_null(const VectorMeasure& nu, const PhaseSet& set);

}  // namespace hweyl
