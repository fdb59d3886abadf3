#include "apsp/kernel.hpp"

#include <algorithm>
#include <string>

#include "apsp/error.hpp"

#if defined(__AVX512F__) || defined(__AVX2__)
#include <immintrin.h>
#endif

namespace apsp {

std::string_view to_string(KernelVariant v) noexcept { return v == KernelVariant::Scalar ? "scalar" : "lanes"; }

KernelVariant parse_kernel(std::string_view name) {
  if (name == "scalar") return KernelVariant::Scalar;
  if (name == "lanes") return KernelVariant::Lanes;
  throw Error(Errc::Config, "unknown kernel \"" + std::string(name) + "\" (expected scalar or lanes)");
}

void check_kernel_config(KernelVariant variant, std::size_t bs) {
  if (bs == 0) throw Error(Errc::Config, "block size must be positive");
  if (variant == KernelVariant::Lanes && bs % kLaneWidth != 0)
    throw Error(Errc::Config, "lanes kernel needs a block size that is a multiple of " + std::to_string(kLaneWidth) +
                                  ", got bs=" + std::to_string(bs));
}

namespace {

// Unconditional stores with a bitwise path select. A plain ternary gets
// if-converted into a conditional store, which targets without masked
// stores cannot vectorize.
inline void relax(Distance& dist, PathEntry& path, Distance candidate, PathEntry via) {
  const Distance current = dist;
  const PathEntry keep = -static_cast<PathEntry>(candidate < current);
  dist = std::min(current, candidate);
  path = (via & keep) | (path & ~keep);
}

void kernel_scalar(BlockView<Distance> target, BlockView<const Distance> row_src, BlockView<const Distance> col_src,
                   BlockView<PathEntry> target_p, std::size_t base_k) {
  const std::size_t bs = target.block_size();
  for (std::size_t k = 0; k < bs; ++k) {
    const auto via = static_cast<PathEntry>(base_k + k);
    const Distance* pivot_row = col_src.row(k);
    for (std::size_t i = 0; i < bs; ++i) {
      const Distance to_pivot = row_src(i, k);
      Distance* dist = target.row(i);
      PathEntry* path = target_p.row(i);
#pragma GCC ivdep
      for (std::size_t j = 0; j < bs; ++j) {
        relax(dist[j], path[j], to_pivot + pivot_row[j], via);
      }
    }
  }
}

// One step of the Lanes kernel: load 16 distances, form 16 candidate sums,
// compare lane-wise and blend the winners into both distance and path lanes.
#if defined(__AVX512F__)

inline void relax_lanes(Distance* dist, PathEntry* path, const Distance* pivot_row, __m512 to_pivot, __m512i via) {
  const __m512 candidate = _mm512_add_ps(to_pivot, _mm512_loadu_ps(pivot_row));
  const __mmask16 shorter = _mm512_cmp_ps_mask(candidate, _mm512_loadu_ps(dist), _CMP_LT_OQ);
  _mm512_mask_storeu_ps(dist, shorter, candidate);
  _mm512_mask_storeu_epi32(path, shorter, via);
}

void kernel_lanes(BlockView<Distance> target, BlockView<const Distance> row_src, BlockView<const Distance> col_src,
                  BlockView<PathEntry> target_p, std::size_t base_k) {
  const std::size_t bs = target.block_size();
  for (std::size_t k = 0; k < bs; ++k) {
    const __m512i via = _mm512_set1_epi32(static_cast<int>(base_k + k));
    const Distance* pivot_row = col_src.row(k);
    for (std::size_t i = 0; i < bs; ++i) {
      const __m512 to_pivot = _mm512_set1_ps(row_src(i, k));
      Distance* dist = target.row(i);
      PathEntry* path = target_p.row(i);
#pragma GCC unroll 4
      for (std::size_t j = 0; j < bs; j += kLaneWidth) relax_lanes(dist + j, path + j, pivot_row + j, to_pivot, via);
    }
  }
}

#elif defined(__AVX2__)

inline void relax_lanes(Distance* dist, PathEntry* path, const Distance* pivot_row, __m256 to_pivot, __m256i via) {
  for (std::size_t half = 0; half < kLaneWidth; half += 8) {
    const __m256 candidate = _mm256_add_ps(to_pivot, _mm256_loadu_ps(pivot_row + half));
    const __m256 mask = _mm256_cmp_ps(candidate, _mm256_loadu_ps(dist + half), _CMP_LT_OQ);
    if (_mm256_testz_ps(mask, mask)) continue;
    const __m256i imask = _mm256_castps_si256(mask);
    _mm256_maskstore_ps(dist + half, imask, candidate);
    _mm256_maskstore_epi32(reinterpret_cast<int*>(path + half), imask, via);
  }
}

void kernel_lanes(BlockView<Distance> target, BlockView<const Distance> row_src, BlockView<const Distance> col_src,
                  BlockView<PathEntry> target_p, std::size_t base_k) {
  const std::size_t bs = target.block_size();
  for (std::size_t k = 0; k < bs; ++k) {
    const __m256i via = _mm256_set1_epi32(static_cast<int>(base_k + k));
    const Distance* pivot_row = col_src.row(k);
    for (std::size_t i = 0; i < bs; ++i) {
      const __m256 to_pivot = _mm256_set1_ps(row_src(i, k));
      Distance* dist = target.row(i);
      PathEntry* path = target_p.row(i);
#pragma GCC unroll 4
      for (std::size_t j = 0; j < bs; j += kLaneWidth) relax_lanes(dist + j, path + j, pivot_row + j, to_pivot, via);
    }
  }
}

#else

inline void relax_lanes(Distance* __restrict dist, PathEntry* __restrict path, const Distance* __restrict pivot_row,
                        Distance to_pivot, PathEntry via) {
  // Fixed trip count; the compiler maps this onto whatever vector width the
  // target has.
#pragma GCC ivdep
  for (std::size_t l = 0; l < kLaneWidth; ++l) {
    relax(dist[l], path[l], to_pivot + pivot_row[l], via);
  }
}

void kernel_lanes(BlockView<Distance> target, BlockView<const Distance> row_src, BlockView<const Distance> col_src,
                  BlockView<PathEntry> target_p, std::size_t base_k) {
  const std::size_t bs = target.block_size();
  for (std::size_t k = 0; k < bs; ++k) {
    const auto via = static_cast<PathEntry>(base_k + k);
    const Distance* pivot_row = col_src.row(k);
    for (std::size_t i = 0; i < bs; ++i) {
      const Distance to_pivot = row_src(i, k);
      Distance* dist = target.row(i);
      PathEntry* path = target_p.row(i);
      for (std::size_t j = 0; j < bs; j += kLaneWidth) relax_lanes(dist + j, path + j, pivot_row + j, to_pivot, via);
    }
  }
}

#endif

}  // namespace

void fw_block(BlockView<Distance> target, BlockView<const Distance> row_src, BlockView<const Distance> col_src,
              BlockView<PathEntry> target_p, std::size_t base_k, KernelVariant variant) {
  if (variant == KernelVariant::Lanes) {
    check_kernel_config(variant, target.block_size());
    kernel_lanes(target, row_src, col_src, target_p, base_k);
  } else {
    kernel_scalar(target, row_src, col_src, target_p, base_k);
  }
}

}  // namespace apsp
