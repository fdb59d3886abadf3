#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/graph.hpp"
#include "apsp/kernel.hpp"
#include "apsp/matrix.hpp"
#include "apsp/worker_pool.hpp"

namespace apsp::bench {

enum class Variant { Naive, BlockedSerial, BlockedParallel };

std::string_view to_string(Variant v) noexcept;
Variant parse_variant(std::string_view name);

enum class Verified { Pass, Fail, Skipped };

std::string_view to_string(Verified v) noexcept;
Verified parse_verified(std::string_view name);

inline constexpr std::size_t kDefaultVerifyCap = 2048;

struct RunConfig {
  Variant variant = Variant::BlockedSerial;
  KernelVariant kernel = KernelVariant::Lanes;
  std::size_t n = 1024;
  std::size_t bs = 64;
  unsigned workers = default_worker_count();
  std::uint64_t seed = 1;
  double edge_probability = 0.5;
  WeightRange weights;
  unsigned reps = 3;
  bool verify = true;
  std::size_t verify_cap = kDefaultVerifyCap;
  Pinning pinning = Pinning::None;

  GraphSpec graph_spec() const { return {n, edge_probability, weights, seed}; }
};

/// Throws Errc::Config / Errc::Divisibility before anything is allocated.
void validate(const RunConfig& config);

struct BenchRecord {
  RunConfig config;
  double wall_time_s = 0.0;  // median over reps, solve only
  double gflops = 0.0;
  Verified verified = Verified::Skipped;
  std::string diagnostic;    // first differing cell on a failed verification
  std::string timestamp;     // UTC, ISO 8601
};

/// 2 n^3 operations: one add and one compare per inner iteration.
double flop_count(std::size_t n) noexcept;
double gflops(std::size_t n, double seconds) noexcept;
double median(std::vector<double> samples);

/// Times one solve; receives the solve as a callable and returns seconds.
using SolveTimer = std::function<double(const std::function<void()>&)>;
SolveTimer steady_timer();

/// Injection points for tests. Defaults give normal behaviour.
struct RunHooks {
  SolveTimer timer;
  /// Applied to the solver's output before verification.
  std::function<void(DistanceMatrix&)> corrupt;
  /// Named harness steps: "generate", "clone", "reference", "verify".
  std::function<void(std::string_view)> on_event;
};

/// Generates the graph from the config's seed, solves it reps times on
/// fresh copies (timing only the solve), verifies against the naive solver
/// when enabled and n <= verify_cap.
BenchRecord run(const RunConfig& config, const RunHooks& hooks = {});

/// Same as run() on a caller-supplied graph (config.n is taken from it).
/// A precomputed naive reference may be passed to skip recomputing it.
BenchRecord run_on(const RunConfig& config, const DistanceMatrix& graph, const DistanceMatrix* reference = nullptr,
                   const RunHooks& hooks = {});

/// Compares bitwise; on mismatch returns a message naming the first
/// differing cell.
std::optional<std::string> first_difference(const DistanceMatrix& expected, const DistanceMatrix& actual);

struct SweepError {
  std::size_t value = 0;  // the bs or worker count that failed
  std::string message;
};

struct SweepResult {
  std::vector<BenchRecord> records;
  std::vector<SweepError> errors;
};

/// One record per legal bs on the same graph; bad entries are reported in
/// errors and skipped.
SweepResult sweep_block_size(const RunConfig& base, std::span<const std::size_t> bs_list,
                             const RunHooks& hooks = {});
SweepResult sweep_workers(const RunConfig& base, std::span<const unsigned> worker_list, const RunHooks& hooks = {});

/// naive, blocked-serial/scalar, blocked-serial/lanes, blocked-parallel/lanes
/// on one graph.
SweepResult run_ladder(const RunConfig& base, const RunHooks& hooks = {});

}  // namespace apsp::bench
