#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "apsp/bench.hpp"
#include "apsp/error.hpp"
#include "apsp/report.hpp"

using namespace apsp;
using namespace apsp::bench;

namespace {

RunConfig small_config(Variant variant = Variant::BlockedSerial) {
  RunConfig c;
  c.variant = variant;
  c.kernel = KernelVariant::Lanes;
  c.n = 128;
  c.bs = 32;
  c.workers = 2;
  c.seed = 17;
  c.edge_probability = 0.1;
  c.reps = 1;
  return c;
}

/// Runs the solve and reports the next scripted duration.
SolveTimer scripted_timer(std::vector<double> durations) {
  auto next = std::make_shared<std::size_t>(0);
  return [durations, next](const std::function<void()>& solve) {
    solve();
    return durations.at((*next)++);
  };
}

bool same_to_6_significant(double a, double b) { return std::fabs(a - b) <= 5e-7 * std::fabs(b); }

}  // namespace

TEST_CASE("median of reps") {
  CHECK(median({5, 4, 3, 2, 1}) == 3.0);
  CHECK(median({2, 8}) == 5.0);
  CHECK(median({7}) == 7.0);
  CHECK_THROWS_AS(median({}), Error);
}

TEST_CASE("run: median over an injected timer") {
  RunConfig c = small_config();
  c.reps = 5;
  RunHooks hooks;
  hooks.timer = scripted_timer({5, 4, 3, 2, 1});
  const BenchRecord r = run(c, hooks);
  CHECK(r.wall_time_s == 3.0);
  CHECK(r.gflops == doctest::Approx(2.0 * 128 * 128 * 128 / 3e9));
  CHECK(r.verified == Verified::Pass);
  CHECK_FALSE(r.timestamp.empty());
}

TEST_CASE("GFLOPS convention: 2 n^3 operations") {
  CHECK(flop_count(1024) == 2.0 * 1024.0 * 1024.0 * 1024.0);
  CHECK(gflops(1000, 2.0) == doctest::Approx(1.0));
  // N=8192 at 338 GFLOPS corresponds to a solve of about 3.253 s.
  const double t = flop_count(8192) / (338.0 * 1e9);
  CHECK(t == doctest::Approx(3.253).epsilon(1e-3));
  CHECK(gflops(8192, 3.253) == doctest::Approx(338.0).epsilon(1e-3));
}

TEST_CASE("degenerate blocking verifies against naive") {
  RunConfig c = small_config();
  c.n = 64;
  c.bs = 64;
  CHECK(run(c).verified == Verified::Pass);
}

TEST_CASE("a corrupted solver output fails verification with a cell diagnostic") {
  RunHooks hooks;
  hooks.corrupt = [](DistanceMatrix& d) { d(3, 9) = d(3, 9) == 1.0f ? 2.0f : 1.0f; };
  for (Variant v : {Variant::Naive, Variant::BlockedSerial, Variant::BlockedParallel}) {
    const BenchRecord r = run(small_config(v), hooks);
    CHECK(r.verified == Verified::Fail);
    CHECK(r.diagnostic.find("(3,9)") != std::string::npos);
  }
}

TEST_CASE("verification is skipped above the cap or when disabled") {
  RunConfig c = small_config();
  c.verify_cap = 64;
  CHECK(run(c).verified == Verified::Skipped);
  c.verify_cap = kDefaultVerifyCap;
  c.verify = false;
  CHECK(run(c).verified == Verified::Skipped);
}

TEST_CASE("only the solve is timed") {
  std::vector<std::string> log;
  RunHooks hooks;
  hooks.on_event = [&](std::string_view e) { log.emplace_back(e); };
  const SolveTimer inner = steady_timer();
  hooks.timer = [&](const std::function<void()>& solve) {
    log.emplace_back("timer-start");
    const double t = inner(solve);
    log.emplace_back("timer-end");
    return t;
  };
  RunConfig c = small_config();
  c.reps = 3;
  (void)run(c, hooks);
  const std::vector<std::string> expected = {"generate",    "clone",     "timer-start", "timer-end",
                                             "clone",       "timer-start", "timer-end", "clone",
                                             "timer-start", "timer-end",   "reference", "verify"};
  CHECK(log == expected);
}

TEST_CASE("run rejects invalid configurations before allocating") {
  RunConfig c = small_config();
  c.bs = 48;  // 128 % 48 != 0
  CHECK_THROWS_AS(run(c), Error);
  c = small_config();
  c.bs = 8;  // lanes need multiples of 16
  CHECK_THROWS_AS(run(c), Error);
  c.kernel = KernelVariant::Scalar;
  CHECK_NOTHROW(validate(c));
  c = small_config();
  c.reps = 0;
  CHECK_THROWS_AS(run(c), Error);
  c = small_config(Variant::BlockedParallel);
  c.workers = 0;
  CHECK_THROWS_AS(run(c), Error);
  c = small_config(Variant::Naive);
  c.bs = 7;  // ignored by the naive solver
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("sweep_block_size: one record per legal bs, bad entries reported") {
  RunConfig c = small_config();
  c.n = 256;
  const std::vector<std::size_t> list = {128, 100, 32, 64};
  const SweepResult r = sweep_block_size(c, list);
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].config.bs == 32);
  CHECK(r.records[1].config.bs == 64);
  CHECK(r.records[2].config.bs == 128);
  for (const auto& rec : r.records) CHECK(rec.verified == Verified::Pass);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].value == 100);
  CHECK(r.errors[0].message.find("100") != std::string::npos);
}

TEST_CASE("sweep_workers: every count verifies") {
  const std::vector<unsigned> workers = {1, 2, 4};
  const SweepResult r = sweep_workers(small_config(), workers);
  REQUIRE(r.records.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.records[i].config.variant == Variant::BlockedParallel);
    CHECK(r.records[i].config.workers == workers[i]);
    CHECK(r.records[i].verified == Verified::Pass);
  }
  CHECK(r.errors.empty());
}

TEST_CASE("CSV: header plus one line per record, recomputable gflops") {
  RunConfig c = small_config();
  c.reps = 2;
  RunHooks hooks;
  hooks.timer = scripted_timer({0.0123456789, 0.0234567891});
  const BenchRecord rec = run(c, hooks);

  std::ostringstream out;
  emit_csv(std::vector<BenchRecord>{rec}, out);
  const std::string text = out.str();
  CHECK(text.find('\r') == std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.rfind(std::string(kCsvHeader) + "\n", 0) == 0);

  std::istringstream in(text);
  const auto back = parse_csv(in);
  REQUIRE(back.size() == 1);
  CHECK(back[0].config.variant == Variant::BlockedSerial);
  CHECK(back[0].config.kernel == KernelVariant::Lanes);
  CHECK(back[0].config.n == 128);
  CHECK(back[0].config.bs == 32);
  CHECK(back[0].config.seed == 17);
  CHECK(back[0].config.reps == 2);
  CHECK(back[0].verified == Verified::Pass);
  CHECK(back[0].wall_time_s == rec.wall_time_s);
  CHECK(same_to_6_significant(gflops(back[0].config.n, back[0].wall_time_s), back[0].gflops));
}

TEST_CASE("CSV and table need at least one record") {
  std::ostringstream out;
  CHECK_THROWS_AS(emit_csv(std::vector<BenchRecord>{}, out), Error);
  CHECK_THROWS_AS(emit_table(std::vector<BenchRecord>{}, out), Error);
  std::istringstream bad("variant,oops\n");
  CHECK_THROWS_AS(parse_csv(bad), Error);
}

TEST_CASE("ladder: four rungs on one graph, printed as a table") {
  RunConfig c = small_config();
  const SweepResult r = run_ladder(c);
  REQUIRE(r.records.size() == 4);
  CHECK(r.records[0].config.variant == Variant::Naive);
  CHECK(r.records[1].config.kernel == KernelVariant::Scalar);
  CHECK(r.records[2].config.kernel == KernelVariant::Lanes);
  CHECK(r.records[3].config.variant == Variant::BlockedParallel);
  for (const auto& rec : r.records) CHECK(rec.verified == Verified::Pass);

  std::ostringstream table;
  emit_table(r.records, table);
  const std::string text = table.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(text.find("naive") != std::string::npos);
  CHECK(text.find("blocked-parallel") != std::string::npos);
  CHECK(text.find("1.00x") != std::string::npos);
}
