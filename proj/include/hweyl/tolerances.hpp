#pragma once

// Tolerance registry. Every verification check and acceptance test reads its
// threshold from here; the report's `tolerance` column echoes these values
// (plus optimizer bracket widths where a check involves a dual-ball search).

namespace hweyl::tol {

/// Identities evaluated by finite sums of O(|G|^2) terms (isometries, round trips,
/// scalarization identities, density identities), relative.
inline constexpr double identity = 1e-10;
/// Identities involving a product of two transforms or a twisted convolution, relative.
inline constexpr double product = 1e-9;
/// One-sided norm inequalities, relative to the larger side.
inline constexpr double inequality = 1e-10;
/// Exact table identities of the group substrate, absolute.
inline constexpr double table = 1e-12;
/// Exact p-semivariation (l^2, p' = 2) against the ascent estimator, relative.
inline constexpr double ascent_agreement = 1e-6;
/// Required relative width of the real semivariation dual-net bracket.
inline constexpr double duality_bracket = 0.02;
/// Lower bound of the noncommutativity witness.
inline constexpr double noncommutativity = 1e-6;
/// "Operator equals zero" threshold, scaled by 1 + input scale.
inline constexpr double zero_operator = 1e-10;

}  // namespace hweyl::tol
