#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <new>
#include <span>
#include <utility>

namespace apsp {

/// Byte alignment of every matrix row start.
inline constexpr std::size_t kRowAlignment = 64;

/// Distance stored for an absent edge. A finite sentinel (2^30): INF + w for
/// any supported weight rounds to a value >= INF, so a relaxation through a
/// missing edge can never win a strict less-than comparison.
inline constexpr float kInf = 1073741824.0f;

/// Path entry meaning "the recorded path is the direct edge".
inline constexpr std::int32_t kNoIntermediate = -1;

using Distance = float;
using PathEntry = std::int32_t;

namespace detail {

struct AlignedFree {
  void operator()(void* p) const noexcept { ::operator delete[](p, std::align_val_t{kRowAlignment}); }
};

}  // namespace detail

/// Square n×n matrix, row-major, rows padded so each one starts on a
/// 64-byte boundary. Value semantics: copies are deep.
template <class T>
class SquareMatrix {
 public:
  static constexpr std::size_t kLanesPerRow = kRowAlignment / sizeof(T);

  SquareMatrix() = default;

  SquareMatrix(std::size_t n, T fill) : n_(n), stride_(padded_stride(n)) {
    auto* raw = static_cast<T*>(::operator new[](stride_ * n_ * sizeof(T), std::align_val_t{kRowAlignment}));
    data_.reset(raw);
    std::fill_n(raw, stride_ * n_, fill);
  }

  SquareMatrix(const SquareMatrix& other) : SquareMatrix(other.n_, T{}) {
    std::copy_n(other.data(), stride_ * n_, data());
  }

  SquareMatrix& operator=(const SquareMatrix& other) {
    if (this != &other) {
      SquareMatrix tmp(other);
      *this = std::move(tmp);
    }
    return *this;
  }

  SquareMatrix(SquareMatrix&&) noexcept = default;
  SquareMatrix& operator=(SquareMatrix&&) noexcept = default;

  std::size_t size() const noexcept { return n_; }
  /// Elements between consecutive row starts.
  std::size_t stride() const noexcept { return stride_; }

  T* data() noexcept { return static_cast<T*>(data_.get()); }
  const T* data() const noexcept { return static_cast<const T*>(data_.get()); }

  T* row(std::size_t i) noexcept { return data() + i * stride_; }
  const T* row(std::size_t i) const noexcept { return data() + i * stride_; }

  std::span<T> row_span(std::size_t i) noexcept { return {row(i), n_}; }
  std::span<const T> row_span(std::size_t i) const noexcept { return {row(i), n_}; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data()[i * stride_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data()[i * stride_ + j]; }

  /// Element-wise equality over the logical n×n region (padding ignored).
  /// For floats this compares bit patterns.
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i) {
      if (!std::equal(a.row(i), a.row(i) + a.n_, b.row(i), [](const T& x, const T& y) {
            return std::bit_cast<std::uint32_t>(x) == std::bit_cast<std::uint32_t>(y);
          }))
        return false;
    }
    return true;
  }

 private:
  static std::size_t padded_stride(std::size_t n) {
    return (n + kLanesPerRow - 1) / kLanesPerRow * kLanesPerRow;
  }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::unique_ptr<void, detail::AlignedFree> data_;
};

static_assert(sizeof(Distance) == 4 && sizeof(PathEntry) == 4);

using DistanceMatrix = SquareMatrix<Distance>;
using PathMatrix = SquareMatrix<PathEntry>;

/// Zero diagonal, INF elsewhere.
DistanceMatrix make_identity_distances(std::size_t n);
PathMatrix make_empty_paths(std::size_t n);

/// Fresh distance/path pair for the blocked solvers. Throws Errc::Divisibility
/// when n is not a multiple of bs and Errc::Resource when allocation fails.
std::pair<DistanceMatrix, PathMatrix> allocate_matrices(std::size_t n, std::size_t bs);

/// Throws Errc::Divisibility (or Errc::Config for zero sizes).
void check_divisible(std::size_t n, std::size_t bs);

struct BlockCoord {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const BlockCoord&, const BlockCoord&) = default;
  friend auto operator<=>(const BlockCoord&, const BlockCoord&) = default;
};

/// Non-owning window onto a bs×bs block of a SquareMatrix.
template <class T>
class BlockView {
 public:
  BlockView(T* origin, std::size_t stride, std::size_t bs) noexcept : origin_(origin), stride_(stride), bs_(bs) {}

  std::size_t block_size() const noexcept { return bs_; }
  std::size_t stride() const noexcept { return stride_; }
  T* row(std::size_t i) const noexcept { return origin_ + i * stride_; }
  T& operator()(std::size_t i, std::size_t j) const noexcept { return origin_[i * stride_ + j]; }

 private:
  T* origin_;
  std::size_t stride_;
  std::size_t bs_;
};

/// Throws Errc::Range when (bi, bj) is outside the n/bs grid.
template <class T>
BlockView<T> block_view(SquareMatrix<T>& m, std::size_t bi, std::size_t bj, std::size_t bs);
template <class T>
BlockView<const T> block_view(const SquareMatrix<T>& m, std::size_t bi, std::size_t bj, std::size_t bs);

/// Unchecked variant for the solver hot paths.
template <class T>
inline BlockView<T> block_at(SquareMatrix<T>& m, BlockCoord b, std::size_t bs) noexcept {
  return {m.row(b.row * bs) + b.col * bs, m.stride(), bs};
}

}  // namespace apsp
