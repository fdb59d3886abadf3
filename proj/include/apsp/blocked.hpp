#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "apsp/kernel.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

/// Dependency phases of one round k.
enum class Phase : unsigned char {
  Diagonal = 1,   // block (k,k), self-dependent
  PivotRow = 2,   // blocks (k,j), j != k
  PivotCol = 3,   // blocks (i,k), i != k
  Remainder = 4,  // blocks (i,j), i != k and j != k
};

std::string_view to_string(Phase phase) noexcept;

struct BlockTask {
  Phase phase = Phase::Diagonal;
  BlockCoord block;

  friend bool operator==(const BlockTask&, const BlockTask&) = default;
};

struct RoundPhasePlan {
  std::size_t round = 0;
  std::size_t grid = 0;  // R = n / bs
  std::vector<BlockCoord> diagonal;  // exactly {(k,k)}
  std::vector<BlockCoord> pivot_row;
  std::vector<BlockCoord> pivot_col;
  std::vector<BlockCoord> remainder;

  const std::vector<BlockCoord>& blocks(Phase phase) const;

  /// Phase-2 and phase-3 blocks as one work list, alternating (k,j) and
  /// (j,k). The two phases only read the diagonal block, so any order is
  /// valid; alternating lets pivot-column work start while pivot-row work
  /// is still queued.
  std::vector<BlockTask> pivot_queue() const;
};

/// Blocks of round k on an R×R grid, each phase in row-major order.
RoundPhasePlan plan_round(std::size_t round, std::size_t grid);

/// Bytes touched by one phase-4 task: three distance blocks (target, row
/// source, column source) and the target's path block, 4-byte elements.
constexpr std::size_t phase4_working_set_bytes(std::size_t bs) noexcept {
  return 4 * bs * bs * sizeof(Distance);
}

/// Runs FW_BLOCK for one block of one round with the sources its phase
/// dictates. Safe to call concurrently for distinct blocks of the same phase.
void update_block(DistanceMatrix& d, PathMatrix& p, std::size_t bs, std::size_t round, Phase phase,
                  BlockCoord block, KernelVariant variant);

/// Validates n/bs divisibility and the kernel's lane constraint.
void check_blocked_config(std::size_t n, std::size_t bs, KernelVariant variant);

/// Single-threaded blocked Floyd-Warshall, in place: R rounds, each running
/// the diagonal block, then the pivot row and column blocks, then the rest.
void fw_blocked_serial(DistanceMatrix& d, PathMatrix& p, std::size_t bs, KernelVariant variant);

}  // namespace apsp
