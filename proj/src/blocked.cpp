#include "apsp/blocked.hpp"

#include <string>

#include "apsp/error.hpp"

namespace apsp {

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::Diagonal: return "diagonal";
    case Phase::PivotRow: return "pivot-row";
    case Phase::PivotCol: return "pivot-col";
    case Phase::Remainder: return "remainder";
  }
  return "?";
}

const std::vector<BlockCoord>& RoundPhasePlan::blocks(Phase phase) const {
  switch (phase) {
    case Phase::PivotRow: return pivot_row;
    case Phase::PivotCol: return pivot_col;
    case Phase::Remainder: return remainder;
    case Phase::Diagonal: break;
  }
  return diagonal;
}

std::vector<BlockTask> RoundPhasePlan::pivot_queue() const {
  std::vector<BlockTask> queue;
  queue.reserve(pivot_row.size() + pivot_col.size());
  for (std::size_t q = 0; q < pivot_row.size(); ++q) {
    queue.push_back({Phase::PivotRow, pivot_row[q]});
    queue.push_back({Phase::PivotCol, pivot_col[q]});
  }
  return queue;
}

RoundPhasePlan plan_round(std::size_t round, std::size_t grid) {
  if (round >= grid) throw Error(Errc::Range, "round " + std::to_string(round) + " outside grid of " +
                                                  std::to_string(grid));
  RoundPhasePlan plan;
  plan.round = round;
  plan.grid = grid;
  plan.diagonal = {BlockCoord{round, round}};
  plan.pivot_row.reserve(grid - 1);
  plan.pivot_col.reserve(grid - 1);
  plan.remainder.reserve((grid - 1) * (grid - 1));
  for (std::size_t other = 0; other < grid; ++other) {
    if (other == round) continue;
    plan.pivot_row.push_back({round, other});
    plan.pivot_col.push_back({other, round});
  }
  for (std::size_t i = 0; i < grid; ++i) {
    if (i == round) continue;
    for (std::size_t j = 0; j < grid; ++j)
      if (j != round) plan.remainder.push_back({i, j});
  }
  return plan;
}

void update_block(DistanceMatrix& d, PathMatrix& p, std::size_t bs, std::size_t round, Phase phase,
                  BlockCoord block, KernelVariant variant) {
  const BlockCoord diag{round, round};
  BlockCoord row_src{};
  BlockCoord col_src{};
  switch (phase) {
    case Phase::Diagonal: row_src = col_src = diag; break;
    case Phase::PivotRow: row_src = diag; col_src = block; break;
    case Phase::PivotCol: row_src = block; col_src = diag; break;
    case Phase::Remainder: row_src = {block.row, round}; col_src = {round, block.col}; break;
  }
  const BlockView<Distance> rs = block_at(d, row_src, bs);
  const BlockView<Distance> cs = block_at(d, col_src, bs);
  fw_block(block_at(d, block, bs), {rs.row(0), rs.stride(), bs}, {cs.row(0), cs.stride(), bs}, block_at(p, block, bs),
           round * bs, variant);
}

void check_blocked_config(std::size_t n, std::size_t bs, KernelVariant variant) {
  check_divisible(n, bs);
  check_kernel_config(variant, bs);
}

void fw_blocked_serial(DistanceMatrix& d, PathMatrix& p, std::size_t bs, KernelVariant variant) {
  check_blocked_config(d.size(), bs, variant);
  if (p.size() != d.size()) throw Error(Errc::Config, "distance and path matrices differ in size");
  const std::size_t grid = d.size() / bs;
  for (std::size_t k = 0; k < grid; ++k) {
    const RoundPhasePlan plan = plan_round(k, grid);
    update_block(d, p, bs, k, Phase::Diagonal, plan.diagonal.front(), variant);
    for (const BlockTask& t : plan.pivot_queue()) update_block(d, p, bs, k, t.phase, t.block, variant);
    for (const BlockCoord& b : plan.remainder) update_block(d, p, bs, k, Phase::Remainder, b, variant);
  }
}

}  // namespace apsp
