#pragma once

#include <cstddef>
#include <cstdint>

#include "apsp/matrix.hpp"

namespace apsp {

struct WeightRange {
  std::uint32_t lo = 1;
  std::uint32_t hi = 100;
};

/// Parameters of a random directed graph with integer edge weights.
struct GraphSpec {
  std::size_t n = 0;
  double edge_probability = 0.5;
  WeightRange weights;
  std::uint64_t seed = 0;
};

/// Throws Errc::Config on n == 0, a probability outside [0, 1], an empty or
/// zero-based weight range, or weights whose worst-case path sum would reach
/// the INF sentinel.
void validate(const GraphSpec& spec);

/// Deterministic in its GraphSpec: each ordered pair i != j gets an edge with
/// probability edge_probability and a uniform integer weight in [lo, hi].
DistanceMatrix generate_graph(const GraphSpec& spec);

/// True when every shortest-path sum over integer weights up to max_weight is
/// exactly representable in single precision (max_weight * (n - 1) <= 2^24).
bool in_exactness_regime(std::size_t n, std::uint32_t max_weight) noexcept;

}  // namespace apsp
