#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <limits>

#include "hweyl/normed_space.hpp"

namespace hweyl {

/// A bracketed value: lower <= true value <= upper, `value` is the reported
/// estimate (always attained by a feasible candidate, hence >= lower).
struct Estimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;

  double width() const noexcept { return upper - lower; }
  double relative_width() const noexcept { return value > 0 ? width() / value : 0.0; }

  static Estimate exact_value(double v) { return {v, v, v, true}; }
  /// Maps the bracket through a monotone nondecreasing function.
  template <class Fn>
  Estimate map(Fn fn) const {
    return {fn(value), fn(lower), fn(upper), exact};
  }
};

/// A finite net of unit vectors in the dual ball B_{X*} with a certified
/// covering radius.
///
/// For every x* on the dual unit sphere some net point y* satisfies
/// ||c x* - y*|| <= eps for a unimodular c. For a seminorm F on X* that is
/// invariant under unimodular scaling this gives
///     max_net F <= sup_{B_X*} F <= max_net F / (1 - eps).
///
/// Points are the normalized faces {u : u_k = 1, |u_j| <= 1} of the max-modulus
/// cube sampled on a regular grid (real: one real grid per free coordinate;
/// complex: a square grid per free coordinate).
class DualNet {
 public:
  /// Chooses the finest grid whose size stays within `budget` points.
  DualNet(const NormedSpace& space, std::size_t budget);

  const NormedSpace& space() const noexcept { return space_; }
  /// d x N matrix, one unit-norm dual functional per column.
  const Eigen::MatrixXcd& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(points_.cols()); }
  double covering_radius() const noexcept { return eps_; }
  /// Grid points per real axis.
  int resolution() const noexcept { return resolution_; }

  struct Result {
    Estimate estimate;
    Eigen::VectorXcd best;  ///< net point attaining the lower bound
  };

  /// Brackets sup over B_X* of F(x*) = reduce(|<v_i, x*>| over the rows v_i of `atoms`),
  /// where `reduce` maps the column of absolute pairings (Eigen::VectorXd) to a
  /// seminorm value.
  template <class Reduce>
  Result maximize_pairings(const Eigen::MatrixXcd& atoms, Reduce reduce) const {
    Result res{{0.0, 0.0, 0.0, false}, points_.col(0)};
    double best = -1.0;
    constexpr Eigen::Index kChunk = 2048;
    Eigen::MatrixXd absval;
    for (Eigen::Index start = 0; start < points_.cols(); start += kChunk) {
      const Eigen::Index cols = std::min(kChunk, points_.cols() - start);
      // <v_i, x*_k> = sum_j v_ij conj(x*_jk)
      absval = (atoms * points_.middleCols(start, cols).conjugate()).cwiseAbs();
      for (Eigen::Index k = 0; k < cols; ++k) {
        const double v = reduce(absval.col(k));
        if (v > best) {
          best = v;
          res.best = points_.col(start + k);
        }
      }
    }
    best = std::max(best, 0.0);
    res.estimate.value = best;
    res.estimate.lower = best;
    res.estimate.upper = eps_ < 1.0 ? best / (1.0 - eps_) : std::numeric_limits<double>::infinity();
    return res;
  }

 private:
  NormedSpace space_;
  Eigen::MatrixXcd points_;
  double eps_ = 1.0;
  int resolution_ = 0;
};

}  // namespace hweyl
