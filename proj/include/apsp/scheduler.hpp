#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apsp/blocked.hpp"
#include "apsp/worker_pool.hpp"

namespace apsp {

/// One executed block task. Times are nanoseconds since the trace origin;
/// start is taken just before the task is claimed from its queue.
struct TaskEvent {
  std::size_t round = 0;
  Phase phase = Phase::Diagonal;
  BlockCoord block;
  unsigned worker = 0;
  std::int64_t start_ns = 0;
  std::int64_t end_ns = 0;
};

/// Per-worker event buffers; each worker appends only to its own.
class ScheduleTrace {
 public:
  explicit ScheduleTrace(unsigned workers);

  unsigned workers() const noexcept { return static_cast<unsigned>(per_worker_.size()); }
  std::int64_t now_ns() const noexcept;
  void record(const TaskEvent& e) { per_worker_[e.worker].push_back(e); }

  /// All events ordered by start time.
  std::vector<TaskEvent> events() const;

 private:
  std::chrono::steady_clock::time_point origin_;
  std::vector<std::vector<TaskEvent>> per_worker_;
};

struct PhaseStructureReport {
  bool single_diagonal_worker = true;   // one diagonal task per round
  bool remainder_after_pivots = true;   // no phase-4 start before phases 2/3 end
  bool pivots_after_diagonal = true;    // no phase-2/3 start before phase 1 ends
  bool rounds_ordered = true;           // round k+1 starts after round k ends
  bool disjoint_writes = true;          // no block written twice or read while written
  std::size_t rounds_with_pivot_overlap = 0;     // a phase-3 start precedes the last phase-2 end
  std::size_t rounds_with_concurrent_pivots = 0; // phase-2 and phase-3 tasks ran simultaneously
  std::size_t rounds = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept {
    return single_diagonal_worker && remainder_after_pivots && pivots_after_diagonal && rounds_ordered &&
           disjoint_writes;
  }
};

/// Audits a recorded schedule against the round/phase dependency rules.
PhaseStructureReport check_phase_structure(const std::vector<TaskEvent>& events, std::size_t grid);

/// Work items of one phase of round k on an R×R grid. Every block of the
/// grid appears in exactly one phase.
std::vector<BlockCoord> partition_blocks(Phase phase, std::size_t round, std::size_t grid);

/// Multi-worker blocked Floyd-Warshall, in place. Per round: worker 0 runs
/// the diagonal block; barrier; the pivot row and column blocks drain from
/// one shared queue; barrier; the remaining blocks drain from a second
/// queue; barrier. Results are bitwise identical to fw_blocked_serial.
void fw_blocked_parallel(DistanceMatrix& d, PathMatrix& p, std::size_t bs, KernelVariant variant, WorkerPool& pool,
                         ScheduleTrace* trace = nullptr);

}  // namespace apsp
