#pragma once

#include <filesystem>
#include <iosfwd>

#include "apsp/matrix.hpp"

namespace apsp {

// Binary layout: "FWM1", u32 n, u32 element kind, u32 reserved (0), then
// n*n little-endian 4-byte elements in row-major order.
enum class ElementKind : std::uint32_t { Distance = 0, Path = 1 };

void write_matrix(const DistanceMatrix& m, std::ostream& out);
void write_matrix(const PathMatrix& m, std::ostream& out);
void write_matrix(const DistanceMatrix& m, const std::filesystem::path& path);
void write_matrix(const PathMatrix& m, const std::filesystem::path& path);

DistanceMatrix read_distance_binary(std::istream& in);
PathMatrix read_path_binary(std::istream& in);

/// Text edge list: "n m" followed by m lines "u v w" (0-based). Absent
/// edges are INF; a repeated edge keeps the smallest weight.
DistanceMatrix read_edge_list(std::istream& in);

/// Reads either format, choosing by the leading magic bytes.
DistanceMatrix read_matrix(const std::filesystem::path& path);
PathMatrix read_path_matrix(const std::filesystem::path& path);

}  // namespace apsp
