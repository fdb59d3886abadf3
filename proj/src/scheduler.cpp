#include "apsp/scheduler.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <map>
#include <set>

#include "apsp/error.hpp"

namespace apsp {

ScheduleTrace::ScheduleTrace(unsigned workers)
    : origin_(std::chrono::steady_clock::now()), per_worker_(workers == 0 ? 1 : workers) {}

std::int64_t ScheduleTrace::now_ns() const noexcept {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - origin_).count();
}

std::vector<TaskEvent> ScheduleTrace::events() const {
  std::vector<TaskEvent> all;
  for (const auto& w : per_worker_) all.insert(all.end(), w.begin(), w.end());
  std::stable_sort(all.begin(), all.end(), [](const TaskEvent& a, const TaskEvent& b) {
    return a.start_ns < b.start_ns;
  });
  return all;
}

std::vector<BlockCoord> partition_blocks(Phase phase, std::size_t round, std::size_t grid) {
  return plan_round(round, grid).blocks(phase);
}

namespace {

std::vector<BlockCoord> sources_of(const TaskEvent& e) {
  const std::size_t k = e.round;
  switch (e.phase) {
    case Phase::Diagonal: return {{k, k}};
    case Phase::PivotRow: return {{k, k}, e.block};
    case Phase::PivotCol: return {e.block, {k, k}};
    case Phase::Remainder: return {{e.block.row, k}, {k, e.block.col}};
  }
  return {};
}

// Phases 2 and 3 share a synchronization interval.
int sync_group(Phase p) {
  return p == Phase::Diagonal ? 1 : p == Phase::Remainder ? 3 : 2;
}

std::string describe(const TaskEvent& e) {
  return "round " + std::to_string(e.round) + " " + std::string(to_string(e.phase)) + " block (" +
         std::to_string(e.block.row) + "," + std::to_string(e.block.col) + ")";
}

}  // namespace

PhaseStructureReport check_phase_structure(const std::vector<TaskEvent>& events, std::size_t grid) {
  PhaseStructureReport report;
  report.rounds = grid;

  struct RoundSpan {
    std::int64_t first_start = INT64_MAX;
    std::int64_t last_end = INT64_MIN;
  };
  std::vector<RoundSpan> rounds(grid);
  std::map<std::pair<std::size_t, int>, std::vector<const TaskEvent*>> groups;

  for (const TaskEvent& e : events) {
    if (e.round >= grid) {
      report.rounds_ordered = false;
      report.violations.push_back("event outside grid: " + describe(e));
      continue;
    }
    rounds[e.round].first_start = std::min(rounds[e.round].first_start, e.start_ns);
    rounds[e.round].last_end = std::max(rounds[e.round].last_end, e.end_ns);
    groups[{e.round, sync_group(e.phase)}].push_back(&e);
  }

  for (std::size_t k = 0; k + 1 < grid; ++k) {
    if (rounds[k + 1].first_start < rounds[k].last_end) {
      report.rounds_ordered = false;
      report.violations.push_back("round " + std::to_string(k + 1) + " started before round " + std::to_string(k) +
                                  " finished");
    }
  }

  for (std::size_t k = 0; k < grid; ++k) {
    const auto& diag = groups[{k, 1}];
    const auto& pivots = groups[{k, 2}];
    const auto& rest = groups[{k, 3}];

    if (diag.size() != 1) {
      report.single_diagonal_worker = false;
      report.violations.push_back("round " + std::to_string(k) + " has " + std::to_string(diag.size()) +
                                  " diagonal tasks");
    }

    std::int64_t diag_end = INT64_MIN;
    for (const TaskEvent* e : diag) diag_end = std::max(diag_end, e->end_ns);
    std::int64_t pivots_end = INT64_MIN;
    std::int64_t row_end = INT64_MIN;
    for (const TaskEvent* e : pivots) {
      pivots_end = std::max(pivots_end, e->end_ns);
      if (e->phase == Phase::PivotRow) row_end = std::max(row_end, e->end_ns);
      if (e->start_ns < diag_end) {
        report.pivots_after_diagonal = false;
        report.violations.push_back(describe(*e) + " started before the diagonal block finished");
      }
    }
    for (const TaskEvent* e : rest) {
      if (e->start_ns < pivots_end) {
        report.remainder_after_pivots = false;
        report.violations.push_back(describe(*e) + " started before the pivot blocks finished");
      }
    }

    bool overlap = false;
    bool concurrent = false;
    for (const TaskEvent* col : pivots) {
      if (col->phase != Phase::PivotCol) continue;
      if (col->start_ns < row_end) overlap = true;
      for (const TaskEvent* row : pivots) {
        if (row->phase == Phase::PivotRow && row->worker != col->worker && row->start_ns < col->end_ns &&
            col->start_ns < row->end_ns)
          concurrent = true;
      }
    }
    report.rounds_with_pivot_overlap += overlap ? 1 : 0;
    report.rounds_with_concurrent_pivots += concurrent ? 1 : 0;

    for (const auto* group : {&diag, &pivots, &rest}) {
      std::set<BlockCoord> targets;
      for (const TaskEvent* e : *group) {
        if (!targets.insert(e->block).second) {
          report.disjoint_writes = false;
          report.violations.push_back(describe(*e) + " written twice in one phase");
        }
      }
      for (const TaskEvent* e : *group) {
        for (const BlockCoord& src : sources_of(*e)) {
          if (src != e->block && targets.contains(src)) {
            report.disjoint_writes = false;
            report.violations.push_back(describe(*e) + " reads a block written in the same phase");
          }
        }
      }
    }
  }
  return report;
}

void fw_blocked_parallel(DistanceMatrix& d, PathMatrix& p, std::size_t bs, KernelVariant variant, WorkerPool& pool,
                         ScheduleTrace* trace) {
  check_blocked_config(d.size(), bs, variant);
  if (p.size() != d.size()) throw Error(Errc::Config, "distance and path matrices differ in size");
  const std::size_t grid = d.size() / bs;
  const unsigned workers = pool.size();
  if (trace && trace->workers() < workers)
    throw Error(Errc::Config, "schedule trace sized for fewer workers than the pool");

  // Written by worker 0 before the first barrier of each round, read by all
  // workers until the last one.
  RoundPhasePlan plan;
  std::vector<BlockTask> pivot_queue;
  // Fresh claim counters per round so no reset has to be synchronized.
  std::vector<std::atomic<std::size_t>> next_pivot(grid);
  std::vector<std::atomic<std::size_t>> next_rest(grid);
  std::barrier sync(static_cast<std::ptrdiff_t>(workers));

  auto drain = [&](unsigned worker, std::size_t k, std::atomic<std::size_t>& next, std::size_t count, auto&& task_at) {
    for (;;) {
      const std::int64_t start = trace ? trace->now_ns() : 0;
      const std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
      if (idx >= count) break;
      const BlockTask t = task_at(idx);
      update_block(d, p, bs, k, t.phase, t.block, variant);
      if (trace) trace->record({k, t.phase, t.block, worker, start, trace->now_ns()});
    }
  };

  pool.run([&](unsigned worker) {
    for (std::size_t k = 0; k < grid; ++k) {
      if (worker == 0) {
        plan = plan_round(k, grid);
        pivot_queue = plan.pivot_queue();
        const std::int64_t start = trace ? trace->now_ns() : 0;
        update_block(d, p, bs, k, Phase::Diagonal, plan.diagonal.front(), variant);
        if (trace) trace->record({k, Phase::Diagonal, plan.diagonal.front(), worker, start, trace->now_ns()});
      }
      sync.arrive_and_wait();

      drain(worker, k, next_pivot[k], pivot_queue.size(), [&](std::size_t i) { return pivot_queue[i]; });
      sync.arrive_and_wait();

      drain(worker, k, next_rest[k], plan.remainder.size(),
            [&](std::size_t i) { return BlockTask{Phase::Remainder, plan.remainder[i]}; });
      sync.arrive_and_wait();
    }
  });
}

}  // namespace apsp
