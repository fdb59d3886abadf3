#include <doctest.h>

#include <set>
#include <utility>

#include "apsp/blocked.hpp"
#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/kernel.hpp"
#include "apsp/reference.hpp"
#include "test_support.hpp"

using namespace apsp;

namespace {

ApspResult solve_blocked(const DistanceMatrix& g, std::size_t bs, KernelVariant kernel) {
  ApspResult r{g, make_empty_paths(g.size())};
  fw_blocked_serial(r.distances, r.paths, bs, kernel);
  return r;
}

BlockView<const Distance> as_const(BlockView<Distance> v) { return {v.row(0), v.stride(), v.block_size()}; }

}  // namespace

TEST_CASE("fw_block: self-dependent 2x2 diagonal block without shortcuts") {
  DistanceMatrix d(2, 0.0f);
  d(0, 1) = 5.0f;
  d(1, 0) = 1.0f;
  PathMatrix p = make_empty_paths(2);
  auto t = block_view(d, 0, 0, 2);
  fw_block(t, as_const(t), as_const(t), block_view(p, 0, 0, 2), 0, KernelVariant::Scalar);
  CHECK(d(0, 0) == 0.0f);
  CHECK(d(0, 1) == 5.0f);
  CHECK(d(1, 0) == 1.0f);
  CHECK(d(1, 1) == 0.0f);
  CHECK(p == make_empty_paths(2));
}

TEST_CASE("fw_block: uniform sources, first pivot wins ties") {
  for (KernelVariant kernel : {KernelVariant::Scalar, KernelVariant::Lanes}) {
    CAPTURE(to_string(kernel));
    constexpr std::size_t bs = 32;
    DistanceMatrix target(bs, kInf);
    DistanceMatrix row_src(bs, 1.0f);
    DistanceMatrix col_src(bs, 1.0f);
    PathMatrix path = make_empty_paths(bs);
    const std::size_t base_k = 96;
    fw_block(block_view(target, 0, 0, bs), block_view(std::as_const(row_src), 0, 0, bs),
             block_view(std::as_const(col_src), 0, 0, bs), block_view(path, 0, 0, bs), base_k, kernel);
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) {
        CHECK(target(i, j) == 2.0f);
        CHECK(path(i, j) == static_cast<PathEntry>(base_k));
      }
  }
}

TEST_CASE("fw_block: INF row source leaves the target untouched") {
  for (KernelVariant kernel : {KernelVariant::Scalar, KernelVariant::Lanes}) {
    constexpr std::size_t bs = 16;
    DistanceMatrix target = generate_graph({bs, 0.7, {1, 100}, 3});
    const DistanceMatrix before = target;
    const DistanceMatrix row_src(bs, kInf);
    const DistanceMatrix col_src = generate_graph({bs, 1.0, {1, 3}, 4});
    PathMatrix path = make_empty_paths(bs);
    fw_block(block_view(target, 0, 0, bs), block_view(row_src, 0, 0, bs), block_view(col_src, 0, 0, bs),
             block_view(path, 0, 0, bs), 0, kernel);
    CHECK(target == before);
    CHECK(path == make_empty_paths(bs));
  }
}

TEST_CASE("lanes kernel: ties keep the current lane, improvements overwrite every lane") {
  constexpr std::size_t bs = 16;
  DistanceMatrix target(bs, 10.0f);
  DistanceMatrix row_src(bs, kInf);
  DistanceMatrix col_src(bs, kInf);
  PathMatrix path(bs, 7);
  // Only pivot k'=0 is usable: row_src[i][0] = 4.
  for (std::size_t i = 0; i < bs; ++i) row_src(i, 0) = 4.0f;
  for (std::size_t j = 0; j < bs; ++j) col_src(0, j) = 3.0f;  // 7 < 10 everywhere
  col_src(0, 5) = 6.0f;                                         // 10 == 10: a tie on lane 5
  fw_block(block_view(target, 0, 0, bs), block_view(std::as_const(row_src), 0, 0, bs),
           block_view(std::as_const(col_src), 0, 0, bs), block_view(path, 0, 0, bs), 32, KernelVariant::Lanes);
  for (std::size_t i = 0; i < bs; ++i) {
    for (std::size_t j = 0; j < bs; ++j) {
      if (j == 5) {
        CHECK(target(i, j) == 10.0f);
        CHECK(path(i, j) == 7);
      } else {
        CHECK(target(i, j) == 7.0f);
        CHECK(path(i, j) == 32);
      }
    }
  }
}

TEST_CASE("lanes kernel: block size must be a multiple of the lane width") {
  CHECK_NOTHROW(check_kernel_config(KernelVariant::Lanes, 64));
  CHECK_NOTHROW(check_kernel_config(KernelVariant::Scalar, 3));
  CHECK_THROWS_AS(check_kernel_config(KernelVariant::Lanes, 24), Error);
  DistanceMatrix d = make_identity_distances(24);
  PathMatrix p = make_empty_paths(24);
  CHECK_THROWS_AS(fw_blocked_serial(d, p, 24, KernelVariant::Lanes), Error);
  // 64 / 16 = 4 lane groups per row per pivot.
  CHECK(64 / kLaneWidth == 4);
}

TEST_CASE("plan_round partitions the grid") {
  for (std::size_t grid : {1u, 2u, 4u, 7u}) {
    for (std::size_t k = 0; k < grid; ++k) {
      const RoundPhasePlan plan = plan_round(k, grid);
      CHECK(plan.diagonal == std::vector<BlockCoord>{{k, k}});
      CHECK(plan.pivot_row.size() == grid - 1);
      CHECK(plan.pivot_col.size() == grid - 1);
      CHECK(plan.remainder.size() == (grid - 1) * (grid - 1));
      std::set<BlockCoord> all;
      for (Phase ph : {Phase::Diagonal, Phase::PivotRow, Phase::PivotCol, Phase::Remainder})
        for (const BlockCoord& b : plan.blocks(ph)) CHECK(all.insert(b).second);
      CHECK(all.size() == grid * grid);
      for (const BlockCoord& b : plan.pivot_row) CHECK((b.row == k && b.col != k));
      for (const BlockCoord& b : plan.pivot_col) CHECK((b.col == k && b.row != k));
      for (const BlockCoord& b : plan.remainder) CHECK((b.row != k && b.col != k));

      const auto queue = plan.pivot_queue();
      CHECK(queue.size() == 2 * (grid - 1));
      for (std::size_t q = 0; q < queue.size(); ++q)
        CHECK(queue[q].phase == (q % 2 == 0 ? Phase::PivotRow : Phase::PivotCol));
    }
  }
  CHECK_THROWS_AS(plan_round(4, 4), Error);
}

TEST_CASE("planner: n=4096, bs=256 runs 16 rounds over 256 blocks") {
  const std::size_t grid = 4096 / 256;
  CHECK(grid == 16);
  const RoundPhasePlan plan = plan_round(0, grid);
  CHECK(1 + plan.pivot_row.size() + plan.pivot_col.size() + plan.remainder.size() == 256);
}

TEST_CASE("planner: phase-4 working set is 1 MB at bs=256") {
  CHECK(phase4_working_set_bytes(256) == 4u * 256u * 256u * 4u);
  CHECK(phase4_working_set_bytes(256) == 1024u * 1024u);
  CHECK(phase4_working_set_bytes(64) == 64u * 1024u);
}

TEST_CASE("fw_blocked_serial: a single block degenerates to the naive algorithm") {
  const DistanceMatrix g3 = generate_graph({3, 0.6, {1, 100}, 2});
  const ApspResult naive3 = solve_naive(g3);
  const ApspResult blocked3 = solve_blocked(g3, 3, KernelVariant::Scalar);
  CHECK(blocked3.distances == naive3.distances);
  CHECK(blocked3.paths == naive3.paths);

  const DistanceMatrix g = generate_graph({64, 0.1, {1, 100}, 8});
  const ApspResult naive = solve_naive(g);
  for (KernelVariant kernel : {KernelVariant::Scalar, KernelVariant::Lanes}) {
    const ApspResult blocked = solve_blocked(g, 64, kernel);
    CHECK(blocked.distances == naive.distances);
    CHECK(blocked.paths == naive.paths);
  }
}

TEST_CASE("fw_blocked_serial: divisibility is enforced") {
  DistanceMatrix d = make_identity_distances(100);
  PathMatrix p = make_empty_paths(100);
  try {
    fw_blocked_serial(d, p, 64, KernelVariant::Scalar);
    FAIL("expected divisibility error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Divisibility);
  }
}

TEST_CASE("property: blocked distances equal naive, kernels agree, paths valid") {
  std::uint64_t seed = 500;
  for (std::size_t n : {32u, 64u, 128u, 256u}) {
    for (std::size_t s = 0; s < 20; ++s, ++seed) {
      const double p = 0.02 + 0.2 * static_cast<double>(s % 5) / 4.0;
      const DistanceMatrix g = generate_graph({n, p, {1, 100}, seed});
      const ApspResult naive = solve_naive(g);
      for (std::size_t bs = 16; bs <= n; bs *= 2) {
        CAPTURE(n);
        CAPTURE(bs);
        CAPTURE(seed);
        const ApspResult scalar = solve_blocked(g, bs, KernelVariant::Scalar);
        const ApspResult lanes = solve_blocked(g, bs, KernelVariant::Lanes);
        CHECK(scalar.distances == naive.distances);
        CHECK(lanes.distances == scalar.distances);
        CHECK(lanes.paths == scalar.paths);
        if (s < 2) CHECK(test_support::all_paths_valid(g, lanes.distances, lanes.paths).empty());
      }
    }
  }
}

TEST_CASE("property: Scalar kernel accepts block sizes that are not lane multiples") {
  const DistanceMatrix g = generate_graph({60, 0.1, {1, 100}, 61});
  const ApspResult naive = solve_naive(g);
  for (std::size_t bs : {1u, 2u, 3u, 5u, 12u, 20u, 30u}) {
    CAPTURE(bs);
    const ApspResult blocked = solve_blocked(g, bs, KernelVariant::Scalar);
    CHECK(blocked.distances == naive.distances);
    CHECK(test_support::all_paths_valid(g, blocked.distances, blocked.paths).empty());
  }
}
