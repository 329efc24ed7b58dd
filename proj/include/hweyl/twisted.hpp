#pragma once

#include <string>
#include <vector>

#include "hweyl/weyl.hpp"

namespace hweyl {

/// Evaluation route for the twisted convolution. All routes agree to rounding.
enum class ConvPath {
  direct,           ///< quadruple loop over output and source phase points, O(|G|^4)
  weyl_factorized,  ///< W^{-1}(W(f) W(g)), O(|G|^3)
  fft,              ///< character transforms per shift, shift-domain product, O(|G|^3)
};

std::string to_string(ConvPath path);
/// Accepts "direct", "weyl_factorized" (or "weyl"), "fft". Throws DomainError.
ConvPath conv_path_from_string(const std::string& name);

/// (f x g)(x,chi) = int f(x x'^{-1}, chi chi'^{-1}) g(x',chi') conj(chi'(x)) chi'(x') dm(x',chi').
///
/// Bilinear, associative, not commutative; W(f x g) = W(f) W(g).
PhaseFunction twisted_convolve(const PhaseFunction& f, const PhaseFunction& g,
                               ConvPath path = ConvPath::weyl_factorized);

/// T^t_{(x',chi')} f (x,chi) = f(x x'^{-1}, chi chi'^{-1}) conj(chi'(x)) chi'(x').
PhaseFunction twisted_translate(const PhaseFunction& f, std::size_t shift_phase);
PhaseFunction twisted_translate(const PhaseFunction& f, const PhasePoint& shift);

/// The unit of the twisted convolution algebra: |G| at (identity, trivial), 0 elsewhere.
PhaseFunction twisted_identity(const FiniteAbelianGroup& group);

/// Exponent r with 1/r = 1/p + 1/q - 1. Throws DomainError when 1/p + 1/q < 1.
Exponent young_target_exponent(Exponent p, Exponent q);

struct YoungMargins {
  Exponent p, q, r;
  /// ||f||_p ||g||_q - ||f x g||_r.
  double young;
  /// ||f||_1 ||g||_q - ||f x g||_q.
  double l1_left;
  /// ||f||_1 ||g||_q - ||g x f||_q.
  double l1_right;
  /// ||f||_p ||g||_q, the scale against which margins are judged.
  double scale;
};

/// Young-type inequality margins; each is >= 0 up to rounding.
/// Throws DomainError("unsupported exponent") when 1/p + 1/q < 1.
YoungMargins young_margins(const PhaseFunction& f, const PhaseFunction& g, Exponent p, Exponent q);

struct BenchRow {
  std::string group;
  ConvPath path;
  double mean_ns;
  double stddev_ns;
  /// Relative L^2 deviation from the direct path.
  double agreement_err;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// mean(direct) / mean(path) for the non-direct paths; empty for zero trials.
  double speedup_weyl_factorized = 0.0;
  double speedup_fft = 0.0;
};

inline constexpr std::size_t kBenchCeiling = 128;

/// Times all three convolution routes on random inputs (paths run
/// sequentially) and records their agreement with the direct route.
/// Throws CeilingExceeded when |G| > ceiling.
BenchReport bench_conv(const FiniteAbelianGroup& group, std::size_t trials,
                       std::uint64_t seed = 1, std::size_t ceiling = kBenchCeiling);

}  // namespace hweyl
