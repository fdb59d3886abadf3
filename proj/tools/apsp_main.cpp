// apsp: generate graphs, run and verify the Floyd-Warshall variants, and
// sweep block sizes or worker counts.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 IO error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "apsp/bench.hpp"
#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/matrix_io.hpp"
#include "apsp/report.hpp"

namespace {

using namespace apsp;
using namespace apsp::bench;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string variant = "blocked-serial";
  std::string kernel = "lanes";
  std::size_t n = 1024;
  std::vector<std::size_t> bs{64};
  std::vector<unsigned> workers{default_worker_count()};
  std::uint64_t seed = 1;
  double p = 0.5;
  std::uint32_t wmin = 1;
  std::uint32_t wmax = 100;
  unsigned reps = 3;
  bool verify = true;
  std::size_t verify_cap = kDefaultVerifyCap;
  std::string pin = "none";
  std::string out;
  std::string input;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--variant", o.variant, "naive | blocked-serial | blocked-parallel (run also accepts all)")
      ->capture_default_str();
  cmd->add_option("--kernel", o.kernel, "scalar | lanes")->capture_default_str();
  cmd->add_option("--n", o.n, "vertex count")->capture_default_str();
  cmd->add_option("--bs", o.bs, "block size (comma list for sweep-bs)")->delimiter(',')->capture_default_str();
  cmd->add_option("--workers", o.workers, "worker threads (comma list for sweep-workers)")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "graph generator seed")->capture_default_str();
  cmd->add_option("--p", o.p, "edge probability")->capture_default_str();
  cmd->add_option("--wmin", o.wmin, "minimum edge weight")->capture_default_str();
  cmd->add_option("--wmax", o.wmax, "maximum edge weight")->capture_default_str();
  cmd->add_option("--reps", o.reps, "timed repetitions (median is reported)")->capture_default_str();
  cmd->add_flag("--verify,!--no-verify", o.verify, "check distances against the naive solver");
  cmd->add_option("--verify-cap", o.verify_cap, "largest n that is verified")->capture_default_str();
  cmd->add_option("--pin", o.pin, "none | spread | compact")->capture_default_str();
  cmd->add_option("--out", o.out, "output file (CSV, or matrix for gen)");
  cmd->add_option("--input", o.input, "input matrix (binary FWM1 or text edge list)");
}

RunConfig to_config(const Options& o, bool allow_all_variants = false) {
  RunConfig c;
  if (!(allow_all_variants && o.variant == "all")) c.variant = parse_variant(o.variant);
  c.kernel = parse_kernel(o.kernel);
  c.n = o.n;
  c.bs = o.bs.empty() ? 0 : o.bs.front();
  c.workers = o.workers.empty() ? 0 : o.workers.front();
  c.seed = o.seed;
  c.edge_probability = o.p;
  c.weights = {o.wmin, o.wmax};
  c.reps = o.reps;
  c.verify = o.verify;
  c.verify_cap = o.verify_cap;
  c.pinning = parse_pinning(o.pin);
  return c;
}

void require_single(const Options& o) {
  if (o.bs.size() != 1) throw Error(Errc::Config, "--bs takes a single value here; use sweep-bs for lists");
  if (o.workers.size() != 1)
    throw Error(Errc::Config, "--workers takes a single value here; use sweep-workers for lists");
}

int report(const std::vector<BenchRecord>& records, const std::vector<SweepError>& errors, const Options& o) {
  for (const SweepError& e : errors) std::cerr << "error: " << e.message << '\n';
  if (!records.empty()) {
    emit_table(records, std::cout);
    if (!o.out.empty()) emit_csv(records, o.out);
  }
  int status = errors.empty() && !records.empty() ? kExitOk : kExitUsage;
  for (const BenchRecord& r : records) {
    if (r.verified == Verified::Fail) {
      std::cerr << "verification failed (" << to_string(r.config.variant) << ", bs=" << r.config.bs
                << "): " << r.diagnostic << '\n';
      status = kExitVerifyFail;
    }
  }
  return status;
}

void note_verify_skip(const RunConfig& c) {
  if (c.verify && c.n > c.verify_cap)
    std::cerr << "notice: n=" << c.n << " exceeds the verification cap " << c.verify_cap
              << "; verification skipped\n";
}

int cmd_run(const Options& o) {
  require_single(o);
  RunConfig config = to_config(o, true);
  std::optional<DistanceMatrix> graph;
  if (!o.input.empty()) {
    graph = read_matrix(o.input);
    config.n = graph->size();
  }
  note_verify_skip(config);
  if (o.variant == "all") {
    if (graph) throw Error(Errc::Config, "--variant all generates its own graph; drop --input");
    const SweepResult r = run_ladder(config);
    return report(r.records, r.errors, o);
  }
  const BenchRecord rec = graph ? run_on(config, *graph) : run(config);
  return report({rec}, {}, o);
}

int cmd_sweep_bs(const Options& o) {
  RunConfig config = to_config(o);
  note_verify_skip(config);
  const SweepResult r = sweep_block_size(config, o.bs);
  return report(r.records, r.errors, o);
}

int cmd_sweep_workers(const Options& o) {
  if (o.bs.size() != 1) throw Error(Errc::Config, "--bs takes a single value for sweep-workers");
  RunConfig config = to_config(o);
  note_verify_skip(config);
  const SweepResult r = sweep_workers(config, o.workers);
  return report(r.records, r.errors, o);
}

int cmd_gen(const Options& o) {
  if (o.out.empty()) throw Error(Errc::Config, "gen needs --out <matrix-file>");
  const GraphSpec spec{o.n, o.p, {o.wmin, o.wmax}, o.seed};
  write_matrix(generate_graph(spec), o.out);
  std::cout << "wrote " << o.n << "x" << o.n << " distance matrix to " << o.out << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o) {
  require_single(o);
  if (o.input.empty()) throw Error(Errc::Config, "verify needs --input <matrix-file>");
  RunConfig config = to_config(o);
  const DistanceMatrix graph = read_matrix(o.input);
  config.verify = true;
  config.verify_cap = graph.size();
  config.reps = 1;
  const BenchRecord rec = run_on(config, graph);
  if (rec.verified == Verified::Fail) {
    std::cerr << "verification failed: " << rec.diagnostic << '\n';
    return kExitVerifyFail;
  }
  std::cout << "verified: " << to_string(rec.config.variant) << " matches naive on n=" << graph.size() << '\n';
  if (!o.out.empty()) emit_csv(std::vector<BenchRecord>{rec}, o.out);
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::Io:
    case Errc::Format:
    case Errc::SizeMismatch:
    case Errc::Truncated: return kExitIo;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocked Floyd-Warshall all-pairs shortest paths toolkit"};
  app.require_subcommand(1);
  Options o;
  CLI::App* run_cmd = app.add_subcommand("run", "solve one configuration (or --variant all for the ladder)");
  CLI::App* sweep_bs = app.add_subcommand("sweep-bs", "solve one graph with each --bs value");
  CLI::App* sweep_w = app.add_subcommand("sweep-workers", "solve one graph in parallel with each --workers value");
  CLI::App* gen = app.add_subcommand("gen", "write a random graph as a binary matrix");
  CLI::App* verify = app.add_subcommand("verify", "check a variant against the naive solver on --input");
  for (CLI::App* cmd : {run_cmd, sweep_bs, sweep_w, gen, verify}) add_common(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(o);
    if (sweep_bs->parsed()) return cmd_sweep_bs(o);
    if (sweep_w->parsed()) return cmd_sweep_workers(o);
    if (gen->parsed()) return cmd_gen(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
