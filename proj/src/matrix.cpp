#include "apsp/matrix.hpp"

#include <string>

#include "apsp/error.hpp"

namespace apsp {

DistanceMatrix make_identity_distances(std::size_t n) {
  DistanceMatrix d(n, kInf);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0.0f;
  return d;
}

PathMatrix make_empty_paths(std::size_t n) { return PathMatrix(n, kNoIntermediate); }

void check_divisible(std::size_t n, std::size_t bs) {
  if (n == 0 || bs == 0)
    throw Error(Errc::Config, "vertex count and block size must be positive (n=" + std::to_string(n) +
                                 ", bs=" + std::to_string(bs) + ")");
  if (n % bs != 0)
    throw Error(Errc::Divisibility,
                "n=" + std::to_string(n) + " is not divisible by block size bs=" + std::to_string(bs));
}

std::pair<DistanceMatrix, PathMatrix> allocate_matrices(std::size_t n, std::size_t bs) {
  check_divisible(n, bs);
  try {
    return {make_identity_distances(n), make_empty_paths(n)};
  } catch (const std::bad_alloc&) {
    throw Error(Errc::Resource, "cannot allocate two " + std::to_string(n) + "x" + std::to_string(n) + " matrices");
  }
}

namespace {

void check_block(std::size_t n, std::size_t bi, std::size_t bj, std::size_t bs) {
  check_divisible(n, bs);
  const std::size_t grid = n / bs;
  if (bi >= grid || bj >= grid)
    throw Error(Errc::Range, "block (" + std::to_string(bi) + "," + std::to_string(bj) + ") outside " +
                                 std::to_string(grid) + "x" + std::to_string(grid) + " grid");
}

}  // namespace

template <class T>
BlockView<T> block_view(SquareMatrix<T>& m, std::size_t bi, std::size_t bj, std::size_t bs) {
  check_block(m.size(), bi, bj, bs);
  return block_at(m, {bi, bj}, bs);
}

template <class T>
BlockView<const T> block_view(const SquareMatrix<T>& m, std::size_t bi, std::size_t bj, std::size_t bs) {
  check_block(m.size(), bi, bj, bs);
  return {m.row(bi * bs) + bj * bs, m.stride(), bs};
}

template BlockView<Distance> block_view(DistanceMatrix&, std::size_t, std::size_t, std::size_t);
template BlockView<const Distance> block_view(const DistanceMatrix&, std::size_t, std::size_t, std::size_t);
template BlockView<PathEntry> block_view(PathMatrix&, std::size_t, std::size_t, std::size_t);
template BlockView<const PathEntry> block_view(const PathMatrix&, std::size_t, std::size_t, std::size_t);

}  // namespace apsp
