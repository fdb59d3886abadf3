#include "apsp/graph.hpp"

#include <random>
#include <string>

#include "apsp/error.hpp"

namespace apsp {

void validate(const GraphSpec& spec) {
  if (spec.n == 0) throw Error(Errc::Config, "graph needs at least one vertex");
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
    throw Error(Errc::Config, "edge probability must lie in [0, 1], got " + std::to_string(spec.edge_probability));
  if (spec.weights.lo < 1 || spec.weights.lo > spec.weights.hi)
    throw Error(Errc::Config, "weight range must satisfy 1 <= lo <= hi, got [" + std::to_string(spec.weights.lo) +
                                  ", " + std::to_string(spec.weights.hi) + "]");
  const double worst = static_cast<double>(spec.weights.hi) * static_cast<double>(spec.n);
  if (worst >= static_cast<double>(kInf))
    throw Error(Errc::Config, "max weight " + std::to_string(spec.weights.hi) + " times n=" + std::to_string(spec.n) +
                                  " reaches the INF sentinel");
}

DistanceMatrix generate_graph(const GraphSpec& spec) {
  validate(spec);
  DistanceMatrix d = make_identity_distances(spec.n);
  std::mt19937_64 rng(spec.seed);
  std::bernoulli_distribution has_edge(spec.edge_probability);
  std::uniform_int_distribution<std::uint32_t> weight(spec.weights.lo, spec.weights.hi);
  for (std::size_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      if (i == j) continue;
      if (has_edge(rng)) d(i, j) = static_cast<float>(weight(rng));
    }
  }
  return d;
}

bool in_exactness_regime(std::size_t n, std::uint32_t max_weight) noexcept {
  const double worst = static_cast<double>(max_weight) * static_cast<double>(n > 0 ? n - 1 : 0);
  return worst <= 16777216.0;
}

}  // namespace apsp
