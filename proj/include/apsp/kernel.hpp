#pragma once

#include <cstddef>
#include <string_view>

#include "apsp/matrix.hpp"

namespace apsp {

enum class KernelVariant {
  Scalar,  // plain conditional update, left to the compiler's vectorizer
  Lanes,   // explicit 16-lane add / compare / masked select
};

/// Lane width of the Lanes kernel: one 512-bit register of floats.
inline constexpr std::size_t kLaneWidth = 16;

std::string_view to_string(KernelVariant v) noexcept;
/// Throws Errc::Config for unknown names.
KernelVariant parse_kernel(std::string_view name);

/// Rejects (Errc::Config) a Lanes kernel whose block size is not a multiple
/// of the lane width.
void check_kernel_config(KernelVariant variant, std::size_t bs);

/// Relaxes every target[i][j] through the pivots base_k .. base_k + bs - 1:
///
///   for k' (outer), i, j (inner):
///     if row_src[i][k'] + col_src[k'][j] < target[i][j]
///       target[i][j] = that sum, target_p[i][j] = base_k + k'
///
/// The target may alias row_src, col_src or both; with k' outermost the
/// self-dependent diagonal block is handled correctly. Requires a zero
/// diagonal inside any aliased pivot block, which holds for non-negative
/// weights. Concurrent calls are safe when their targets are disjoint and
/// no call writes another's sources.
void fw_block(BlockView<Distance> target, BlockView<const Distance> row_src, BlockView<const Distance> col_src,
              BlockView<PathEntry> target_p, std::size_t base_k, KernelVariant variant);

}  // namespace apsp
