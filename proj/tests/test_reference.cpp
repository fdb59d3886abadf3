#include <doctest.h>

#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/oracle.hpp"
#include "apsp/reference.hpp"
#include "test_support.hpp"

using namespace apsp;

namespace {

// 0 -> 1 (1), 1 -> 2 (2), 0 -> 2 (10)
DistanceMatrix three_vertex_graph() {
  DistanceMatrix d = make_identity_distances(3);
  d(0, 1) = 1.0f;
  d(1, 2) = 2.0f;
  d(0, 2) = 10.0f;
  return d;
}

}  // namespace

TEST_CASE("oracles agree on the three-vertex example") {
  const DistanceMatrix g = three_vertex_graph();
  const DistanceMatrix by_enumeration = oracle::enumerate_simple_paths(g);
  const DistanceMatrix by_squaring = oracle::min_plus_squaring(g);
  CHECK(by_enumeration(0, 2) == 3.0f);
  CHECK(by_enumeration == by_squaring);
  CHECK(oracle::brute_force(g) == by_enumeration);
}

TEST_CASE("fw_naive: three-vertex example goes through vertex 1") {
  const ApspResult r = solve_naive(three_vertex_graph());
  CHECK(r.distances(0, 2) == 3.0f);
  CHECK(r.paths(0, 2) == 1);
  CHECK(r.distances(0, 1) == 1.0f);
  CHECK(r.paths(0, 1) == kNoIntermediate);
  CHECK(r.distances(2, 0) == kInf);
  CHECK(r.distances == oracle::enumerate_simple_paths(three_vertex_graph()));
}

TEST_CASE("fw_naive: disconnected pair stays INF with no intermediate") {
  const ApspResult r = solve_naive(make_identity_distances(2));
  CHECK(r.distances(0, 1) == kInf);
  CHECK(r.paths(0, 1) == kNoIntermediate);
}

TEST_CASE("fw_naive: all-INF input is a fixed point") {
  const DistanceMatrix g = make_identity_distances(17);
  const ApspResult r = solve_naive(g);
  CHECK(r.distances == g);
  CHECK(r.paths == make_empty_paths(17));
}

TEST_CASE("oracles: identity and complete uniform graph") {
  const DistanceMatrix id = make_identity_distances(6);
  CHECK(oracle::enumerate_simple_paths(id) == id);
  CHECK(oracle::min_plus_squaring(id) == id);

  const DistanceMatrix k4 = generate_graph({4, 1.0, {5, 5}, 1});
  const DistanceMatrix out = oracle::brute_force(k4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(out(i, j) == (i == j ? 0.0f : 5.0f));
}

TEST_CASE("oracles enforce their size limits") {
  CHECK_THROWS_AS(oracle::enumerate_simple_paths(make_identity_distances(11)), Error);
  CHECK_THROWS_AS(oracle::min_plus_squaring(make_identity_distances(65)), Error);
  try {
    (void)oracle::brute_force(make_identity_distances(65));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OracleLimit);
  }
}

TEST_CASE("property: the two oracle strategies agree on small random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 9;  // 2..10
    const double p = 0.2 + 0.1 * static_cast<double>(seed % 6);
    const DistanceMatrix g = generate_graph({n, p, {1, 100}, seed});
    CAPTURE(seed);
    CHECK(oracle::enumerate_simple_paths(g) == oracle::min_plus_squaring(g));
  }
}

TEST_CASE("property: fw_naive matches the brute-force oracle bitwise (100 seeds, n <= 64)") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + (seed * 7) % 64;
    const double p = 0.05 + 0.9 * static_cast<double>(seed % 10) / 10.0;
    const DistanceMatrix g = generate_graph({n, p, {1, 100}, 1000 + seed});
    CAPTURE(seed);
    CAPTURE(n);
    CHECK(solve_naive(g).distances == oracle::brute_force(g));
  }
}

TEST_CASE("property: fw_naive is idempotent") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ApspResult once = solve_naive(generate_graph({48, 0.2, {1, 100}, seed}));
    DistanceMatrix d = once.distances;
    PathMatrix p = once.paths;
    fw_naive(d, p);
    CHECK(d == once.distances);
    CHECK(p == once.paths);
  }
}

TEST_CASE("property: triangle inequality on the output") {
  const ApspResult r = solve_naive(generate_graph({40, 0.15, {1, 100}, 5}));
  const auto& d = r.distances;
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j)
      for (std::size_t k = 0; k < 40; ++k) {
        if (d(i, k) < kInf && d(k, j) < kInf) CHECK(d(i, j) <= d(i, k) + d(k, j));
      }
}

TEST_CASE("reconstruct_path: examples") {
  const DistanceMatrix g = three_vertex_graph();
  const ApspResult r = solve_naive(g);
  CHECK(reconstruct_path(r, 0, 2) == VertexPath{0, 1, 2});
  CHECK(reconstruct_path(r, 1, 1) == VertexPath{1});
  CHECK(reconstruct_path(r, 2, 0).empty());
  CHECK(reconstruct_path(r, 0, 1) == VertexPath{0, 1});
  CHECK_THROWS_AS(reconstruct_path(r, 0, 3), Error);
}

TEST_CASE("property: every finite pair reconstructs to a path summing to its distance") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DistanceMatrix g = generate_graph({50, 0.08, {1, 100}, 77 + seed});
    const ApspResult r = solve_naive(g);
    CAPTURE(seed);
    CHECK(test_support::all_paths_valid(g, r.distances, r.paths).empty());
  }
}

TEST_CASE("reconstruct_path: a cyclic path matrix is reported as corruption") {
  DistanceMatrix d = make_identity_distances(3);
  d(0, 2) = 4.0f;
  d(0, 1) = 2.0f;
  d(1, 2) = 2.0f;
  PathMatrix p = make_empty_paths(3);
  p(0, 2) = 1;
  p(1, 2) = 0;  // expands back into (0,2)
  p(0, 1) = 2;
  try {
    (void)reconstruct_path(d, p, 0, 2);
    FAIL("expected corruption error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Corruption);
  }
}
