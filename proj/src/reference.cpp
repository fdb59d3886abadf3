#include "apsp/reference.hpp"

#include <string>
#include <utility>

#include "apsp/error.hpp"

namespace apsp {

void fw_naive(DistanceMatrix& d, PathMatrix& p) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d(i, k) + d(k, j) < d(i, j)) {
          d(i, j) = d(i, k) + d(k, j);
          p(i, j) = static_cast<PathEntry>(k);
        }
      }
    }
  }
}

ApspResult solve_naive(const DistanceMatrix& graph) {
  ApspResult r{graph, make_empty_paths(graph.size())};
  fw_naive(r.distances, r.paths);
  return r;
}

VertexPath reconstruct_path(const DistanceMatrix& d, const PathMatrix& p, std::size_t i, std::size_t j) {
  const std::size_t n = d.size();
  if (i >= n || j >= n || p.size() != n)
    throw Error(Errc::Range, "vertex pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside n=" +
                                 std::to_string(n));
  if (i == j) return {i};
  if (!(d(i, j) < kInf)) return {};

  // Depth-first expansion of the (from, to) segments, emitting each
  // segment's tail vertex. A simple path has at most n - 1 edges, so more
  // splits than that means p contains a cycle.
  VertexPath out{i};
  std::vector<std::pair<std::size_t, std::size_t>> pending{{i, j}};
  std::size_t splits = 0;
  while (!pending.empty()) {
    auto [from, to] = pending.back();
    pending.pop_back();
    const PathEntry mid = p(from, to);
    if (mid == kNoIntermediate) {
      out.push_back(to);
      continue;
    }
    if (mid < 0 || static_cast<std::size_t>(mid) >= n || static_cast<std::size_t>(mid) == from ||
        static_cast<std::size_t>(mid) == to || ++splits >= n)
      throw Error(Errc::Corruption, "path matrix is inconsistent while expanding (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
    const auto k = static_cast<std::size_t>(mid);
    pending.emplace_back(k, to);
    pending.emplace_back(from, k);
  }
  return out;
}

}  // namespace apsp
