#pragma once

#include <cstddef>
#include <vector>

#include "apsp/matrix.hpp"

namespace apsp {

/// Shortest distances plus the "most recently added intermediate vertex"
/// record for every pair.
struct ApspResult {
  DistanceMatrix distances;
  PathMatrix paths;
};

/// Textbook triple loop, in place. Relaxes d[i][j] through k only when the
/// detour is strictly shorter, recording k in p[i][j].
void fw_naive(DistanceMatrix& d, PathMatrix& p);

/// Convenience: copies the graph, allocates the path matrix, solves.
ApspResult solve_naive(const DistanceMatrix& graph);

using VertexPath = std::vector<std::size_t>;

/// Expands p recursively: path(i,j) = path(i,k) ++ path(k,j) with
/// k = p[i][j]. Empty for unreachable pairs, {i} for i == j.
/// Throws Errc::Range for bad vertices, Errc::Corruption when the expansion
/// cannot terminate within n vertices.
VertexPath reconstruct_path(const DistanceMatrix& d, const PathMatrix& p, std::size_t i, std::size_t j);
inline VertexPath reconstruct_path(const ApspResult& r, std::size_t i, std::size_t j) {
  return reconstruct_path(r.distances, r.paths, i, j);
}

}  // namespace apsp
