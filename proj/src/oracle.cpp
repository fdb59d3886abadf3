#include "apsp/oracle.hpp"

#include <string>
#include <vector>

#include "apsp/error.hpp"

namespace apsp::oracle {
namespace {

void check_limit(std::size_t n, std::size_t limit, const char* name) {
  if (n > limit)
    throw Error(Errc::OracleLimit,
                std::string(name) + " oracle supports n <= " + std::to_string(limit) + ", got " + std::to_string(n));
}

struct Enumerator {
  const DistanceMatrix& graph;
  DistanceMatrix& best;
  std::vector<bool> on_path;
  std::size_t source = 0;

  // Path sums are accumulated in double and compared exactly; integer inputs
  // stay exact far beyond anything ten vertices can produce.
  void walk(std::size_t at, double length) {
    const std::size_t n = graph.size();
    for (std::size_t next = 0; next < n; ++next) {
      if (on_path[next] || !(graph(at, next) < kInf)) continue;
      const double extended = length + static_cast<double>(graph(at, next));
      if (extended < static_cast<double>(best(source, next))) best(source, next) = static_cast<float>(extended);
      on_path[next] = true;
      walk(next, extended);
      on_path[next] = false;
    }
  }
};

}  // namespace

DistanceMatrix enumerate_simple_paths(const DistanceMatrix& graph) {
  const std::size_t n = graph.size();
  check_limit(n, kEnumerationLimit, "path-enumeration");
  DistanceMatrix best(n, kInf);
  Enumerator e{graph, best, std::vector<bool>(n, false)};
  for (std::size_t s = 0; s < n; ++s) {
    best(s, s) = 0.0f;
    e.source = s;
    e.on_path.assign(n, false);
    e.on_path[s] = true;
    e.walk(s, 0.0);
  }
  return best;
}

DistanceMatrix min_plus_squaring(const DistanceMatrix& graph) {
  const std::size_t n = graph.size();
  check_limit(n, kSquaringLimit, "min-plus squaring");
  // Work in double with an explicit unreachable flag so the sentinel never
  // takes part in arithmetic.
  constexpr double kUnreachable = -1.0;
  std::vector<double> cur(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cur[i * n + j] = i == j ? 0.0 : (graph(i, j) < kInf ? static_cast<double>(graph(i, j)) : kUnreachable);

  // After s squarings cur holds shortest walks of at most 2^s edges.
  std::size_t hops = 1;
  std::vector<double> next(n * n);
  while (hops + 1 < n) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double acc = cur[i * n + j];
        for (std::size_t m = 0; m < n; ++m) {
          const double a = cur[i * n + m];
          const double b = cur[m * n + j];
          if (a == kUnreachable || b == kUnreachable) continue;
          if (acc == kUnreachable || a + b < acc) acc = a + b;
        }
        next[i * n + j] = acc;
      }
    }
    cur.swap(next);
    hops *= 2;
  }

  DistanceMatrix out(n, kInf);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (cur[i * n + j] != kUnreachable) out(i, j) = static_cast<float>(cur[i * n + j]);
  return out;
}

DistanceMatrix brute_force(const DistanceMatrix& graph) {
  if (graph.size() <= kEnumerationLimit) return enumerate_simple_paths(graph);
  return min_plus_squaring(graph);
}

}  // namespace apsp::oracle
