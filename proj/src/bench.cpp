#include "apsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <memory>

#include "apsp/blocked.hpp"
#include "apsp/error.hpp"
#include "apsp/reference.hpp"
#include "apsp/scheduler.hpp"

namespace apsp::bench {

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::Naive: return "naive";
    case Variant::BlockedSerial: return "blocked-serial";
    case Variant::BlockedParallel: return "blocked-parallel";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "naive") return Variant::Naive;
  if (name == "blocked-serial") return Variant::BlockedSerial;
  if (name == "blocked-parallel") return Variant::BlockedParallel;
  throw Error(Errc::Config, "unknown variant \"" + std::string(name) +
                                "\" (expected naive, blocked-serial or blocked-parallel)");
}

std::string_view to_string(Verified v) noexcept {
  switch (v) {
    case Verified::Pass: return "pass";
    case Verified::Fail: return "fail";
    case Verified::Skipped: return "skipped";
  }
  return "?";
}

Verified parse_verified(std::string_view name) {
  if (name == "pass") return Verified::Pass;
  if (name == "fail") return Verified::Fail;
  if (name == "skipped") return Verified::Skipped;
  throw Error(Errc::Format, "unknown verification status \"" + std::string(name) + "\"");
}

void validate(const RunConfig& config) {
  validate(config.graph_spec());
  if (config.reps == 0) throw Error(Errc::Config, "reps must be at least 1");
  if (config.variant == Variant::Naive) return;
  check_blocked_config(config.n, config.bs, config.kernel);
  if (config.variant == Variant::BlockedParallel && config.workers == 0)
    throw Error(Errc::Config, "worker count must be at least 1");
}

double flop_count(std::size_t n) noexcept {
  const auto x = static_cast<double>(n);
  return 2.0 * x * x * x;
}

double gflops(std::size_t n, double seconds) noexcept { return flop_count(n) / (seconds * 1e9); }

double median(std::vector<double> samples) {
  if (samples.empty()) throw Error(Errc::Config, "median of no samples");
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

SolveTimer steady_timer() {
  return [](const std::function<void()>& solve) {
    const auto t0 = std::chrono::steady_clock::now();
    solve();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
  };
}

std::optional<std::string> first_difference(const DistanceMatrix& expected, const DistanceMatrix& actual) {
  if (expected.size() != actual.size())
    return "size differs: expected n=" + std::to_string(expected.size()) + ", got n=" + std::to_string(actual.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      if (std::bit_cast<std::uint32_t>(expected(i, j)) != std::bit_cast<std::uint32_t>(actual(i, j)))
        return "first mismatch at (" + std::to_string(i) + "," + std::to_string(j) + "): expected " +
               std::to_string(expected(i, j)) + ", got " + std::to_string(actual(i, j));
    }
  }
  return std::nullopt;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const RunHooks& hooks, std::string_view event) {
  if (hooks.on_event) hooks.on_event(event);
}

bool should_verify(const RunConfig& config) { return config.verify && config.n <= config.verify_cap; }

DistanceMatrix naive_reference(const DistanceMatrix& graph, const RunHooks& hooks) {
  emit(hooks, "reference");
  return solve_naive(graph).distances;
}

}  // namespace

BenchRecord run_on(const RunConfig& base, const DistanceMatrix& graph, const DistanceMatrix* reference,
                   const RunHooks& hooks) {
  RunConfig config = base;
  config.n = graph.size();
  if (config.variant != Variant::Naive) check_blocked_config(config.n, config.bs, config.kernel);
  if (config.reps == 0) throw Error(Errc::Config, "reps must be at least 1");

  std::unique_ptr<WorkerPool> pool;
  if (config.variant == Variant::BlockedParallel) pool = std::make_unique<WorkerPool>(config.workers, config.pinning);

  const SolveTimer timer = hooks.timer ? hooks.timer : steady_timer();
  std::vector<double> times;
  times.reserve(config.reps);
  DistanceMatrix solved;
  for (unsigned rep = 0; rep < config.reps; ++rep) {
    emit(hooks, "clone");
    DistanceMatrix d = graph;
    PathMatrix p = make_empty_paths(config.n);
    times.push_back(timer([&] {
      switch (config.variant) {
        case Variant::Naive: fw_naive(d, p); break;
        case Variant::BlockedSerial: fw_blocked_serial(d, p, config.bs, config.kernel); break;
        case Variant::BlockedParallel: fw_blocked_parallel(d, p, config.bs, config.kernel, *pool); break;
      }
    }));
    if (rep + 1 == config.reps) solved = std::move(d);
  }

  BenchRecord record;
  record.config = config;
  record.wall_time_s = median(times);
  record.gflops = gflops(config.n, record.wall_time_s);
  record.timestamp = utc_timestamp();

  if (hooks.corrupt) hooks.corrupt(solved);
  if (should_verify(config)) {
    DistanceMatrix computed;
    if (!reference) {
      computed = naive_reference(graph, hooks);
      reference = &computed;
    }
    emit(hooks, "verify");
    const auto diff = first_difference(*reference, solved);
    record.verified = diff ? Verified::Fail : Verified::Pass;
    if (diff) record.diagnostic = *diff;
  }
  return record;
}

BenchRecord run(const RunConfig& config, const RunHooks& hooks) {
  validate(config);
  emit(hooks, "generate");
  const DistanceMatrix graph = generate_graph(config.graph_spec());
  return run_on(config, graph, nullptr, hooks);
}

namespace {

template <class Value, class Apply>
SweepResult sweep(const RunConfig& base, std::span<const Value> values, const RunHooks& hooks, Apply apply) {
  if (values.empty()) throw Error(Errc::Config, "sweep list is empty");
  validate(base.graph_spec());
  emit(hooks, "generate");
  const DistanceMatrix graph = generate_graph(base.graph_spec());
  std::optional<DistanceMatrix> reference;

  SweepResult result;
  for (const Value v : values) {
    RunConfig config = base;
    apply(config, v);
    try {
      validate(config);
      if (should_verify(config) && !reference) reference = naive_reference(graph, hooks);
      result.records.push_back(run_on(config, graph, reference ? &*reference : nullptr, hooks));
    } catch (const Error& e) {
      if (e.code() != Errc::Config && e.code() != Errc::Divisibility) throw;
      result.errors.push_back({static_cast<std::size_t>(v), e.what()});
    }
  }
  return result;
}

}  // namespace

SweepResult sweep_block_size(const RunConfig& base, std::span<const std::size_t> bs_list, const RunHooks& hooks) {
  std::vector<std::size_t> ordered(bs_list.begin(), bs_list.end());
  std::stable_sort(ordered.begin(), ordered.end());
  return sweep(base, std::span<const std::size_t>(ordered), hooks,
               [](RunConfig& c, std::size_t bs) { c.bs = bs; });
}

SweepResult sweep_workers(const RunConfig& base, std::span<const unsigned> worker_list, const RunHooks& hooks) {
  RunConfig parallel = base;
  parallel.variant = Variant::BlockedParallel;
  return sweep(parallel, worker_list, hooks, [](RunConfig& c, unsigned w) { c.workers = w; });
}

SweepResult run_ladder(const RunConfig& base, const RunHooks& hooks) {
  struct Rung {
    Variant variant;
    KernelVariant kernel;
  };
  static constexpr Rung kRungs[] = {
      {Variant::Naive, KernelVariant::Scalar},
      {Variant::BlockedSerial, KernelVariant::Scalar},
      {Variant::BlockedSerial, KernelVariant::Lanes},
      {Variant::BlockedParallel, KernelVariant::Lanes},
  };
  static constexpr std::size_t kIndices[] = {0, 1, 2, 3};
  return sweep(base, std::span<const std::size_t>(kIndices), hooks, [](RunConfig& c, std::size_t i) {
    c.variant = kRungs[i].variant;
    c.kernel = kRungs[i].kernel;
  });
}

}  // namespace apsp::bench
