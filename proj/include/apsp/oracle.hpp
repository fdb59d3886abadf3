#pragma once

#include <cstddef>

#include "apsp/matrix.hpp"

// Independent distance oracles for verification. Neither shares code with
// the Floyd-Warshall solvers.
namespace apsp::oracle {

inline constexpr std::size_t kEnumerationLimit = 10;
inline constexpr std::size_t kSquaringLimit = 64;

/// Depth-first enumeration of every simple path. n <= 10.
DistanceMatrix enumerate_simple_paths(const DistanceMatrix& graph);

/// Repeated min-plus squaring of the edge matrix, ceil(log2 n) times. n <= 64.
DistanceMatrix min_plus_squaring(const DistanceMatrix& graph);

/// Picks enumeration for tiny inputs and squaring otherwise; throws
/// Errc::OracleLimit above 64 vertices.
DistanceMatrix brute_force(const DistanceMatrix& graph);

}  // namespace apsp::oracle
