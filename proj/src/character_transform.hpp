#pragma once

#include <cstddef>

#include "hweyl/group.hpp"

namespace hweyl::detail {

enum class TransformSign { synthesis, analysis };

/// Batched character transform over G on `batches` contiguous blocks of |G| values.
///   synthesis: out[b][y] = sum_a in[b][a] chi_a(y)
///   analysis:  out[b][a] = sum_y in[b][y] conj(chi_a(y))
/// Unnormalized. `in` and `out` may alias.
void character_transform(const FiniteAbelianGroup& group, const cplx* in, cplx* out,
                         std::size_t batches, TransformSign sign);

}  // namespace hweyl::detail
