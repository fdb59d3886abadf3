#include "apsp/matrix_io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "apsp/error.hpp"

namespace apsp {
namespace {

constexpr std::array<char, 4> kMagic = {'F', 'W', 'M', '1'};
constexpr std::uint32_t kMaxVertices = 1u << 20;

std::uint32_t to_le(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap32(v);
  return v;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  v = to_le(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
void write_binary(const SquareMatrix<T>& m, ElementKind kind, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, static_cast<std::uint32_t>(m.size()));
  put_u32(out, static_cast<std::uint32_t>(kind));
  put_u32(out, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if constexpr (std::endian::native == std::endian::little) {
      out.write(reinterpret_cast<const char*>(m.row(i)), static_cast<std::streamsize>(m.size() * sizeof(T)));
    } else {
      for (std::size_t j = 0; j < m.size(); ++j) put_u32(out, std::bit_cast<std::uint32_t>(m(i, j)));
    }
  }
  if (!out) throw Error(Errc::Io, "write failed");
}

struct Header {
  std::uint32_t n;
  ElementKind kind;
};

Header read_header(std::istream& in) {
  std::array<char, 16> raw{};
  in.read(raw.data(), raw.size());
  if (in.gcount() != static_cast<std::streamsize>(raw.size()))
    throw Error(Errc::Format, "malformed header: file shorter than 16 bytes");
  if (!std::equal(kMagic.begin(), kMagic.end(), raw.begin()))
    throw Error(Errc::Format, "malformed header: bad magic (expected FWM1)");
  std::uint32_t fields[3];
  std::memcpy(fields, raw.data() + 4, sizeof fields);
  const std::uint32_t n = to_le(fields[0]);
  const std::uint32_t kind = to_le(fields[1]);
  const std::uint32_t reserved = to_le(fields[2]);
  if (n == 0) throw Error(Errc::Format, "malformed header: n must be positive");
  if (n > kMaxVertices) throw Error(Errc::Format, "malformed header: n=" + std::to_string(n) + " exceeds limit");
  if (kind > 1) throw Error(Errc::Format, "malformed header: unknown element kind " + std::to_string(kind));
  if (reserved != 0) throw Error(Errc::Format, "malformed header: reserved field is not zero");
  return {n, static_cast<ElementKind>(kind)};
}

template <class T>
SquareMatrix<T> read_payload(std::istream& in, std::uint32_t n) {
  SquareMatrix<T> m(n, T{});
  const auto row_bytes = static_cast<std::streamsize>(std::size_t{n} * sizeof(T));
  for (std::size_t i = 0; i < n; ++i) {
    in.read(reinterpret_cast<char*>(m.row(i)), row_bytes);
    if (in.gcount() != row_bytes)
      throw Error(Errc::Truncated, "truncated payload: row " + std::to_string(i) + " of " + std::to_string(n) +
                                       " is incomplete");
    if constexpr (std::endian::native == std::endian::big) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = std::bit_cast<T>(to_le(std::bit_cast<std::uint32_t>(m(i, j))));
    }
  }
  if (in.peek() != std::char_traits<char>::eof())
    throw Error(Errc::SizeMismatch, "size mismatch: trailing bytes after " + std::to_string(n) + "x" +
                                        std::to_string(n) + " payload");
  return m;
}

void check_distances(const DistanceMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      const float v = d(i, j);
      if (!(v >= 0.0f) || !std::isfinite(v) || v > kInf)
        throw Error(Errc::Format, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not a non-negative distance or INF");
    }
    if (d(i, i) != 0.0f) throw Error(Errc::Format, "diagonal entry " + std::to_string(i) + " is not zero");
  }
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return in;
}

void write_file(const std::filesystem::path& path, auto&& emit) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path.string());
  emit(out);
  out.flush();
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

}  // namespace

void write_matrix(const DistanceMatrix& m, std::ostream& out) { write_binary(m, ElementKind::Distance, out); }
void write_matrix(const PathMatrix& m, std::ostream& out) { write_binary(m, ElementKind::Path, out); }

void write_matrix(const DistanceMatrix& m, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_matrix(m, out); });
}

void write_matrix(const PathMatrix& m, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_matrix(m, out); });
}

DistanceMatrix read_distance_binary(std::istream& in) {
  const Header h = read_header(in);
  if (h.kind != ElementKind::Distance) throw Error(Errc::Format, "malformed header: expected a distance matrix");
  DistanceMatrix d = read_payload<Distance>(in, h.n);
  check_distances(d);
  return d;
}

PathMatrix read_path_binary(std::istream& in) {
  const Header h = read_header(in);
  if (h.kind != ElementKind::Path) throw Error(Errc::Format, "malformed header: expected a path matrix");
  PathMatrix p = read_payload<PathEntry>(in, h.n);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p(i, j) < kNoIntermediate || p(i, j) >= static_cast<PathEntry>(h.n))
        throw Error(Errc::Format, "path entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return p;
}

DistanceMatrix read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw Error(Errc::Format, "edge list: missing \"n m\" header");
  long long n = 0, m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
      throw Error(Errc::Format, "edge list: malformed header line \"" + line + "\"");
  }
  if (n <= 0) throw Error(Errc::Format, "edge list: n must be positive, got " + std::to_string(n));
  if (n > kMaxVertices) throw Error(Errc::Format, "edge list: n=" + std::to_string(n) + " exceeds limit");
  if (m < 0) throw Error(Errc::Format, "edge list: negative edge count");

  DistanceMatrix d = make_identity_distances(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line())
      throw Error(Errc::Truncated, "edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    std::istringstream rec(line);
    long long u = 0, v = 0;
    float w = 0.0f;
    std::string extra;
    if (!(rec >> u >> v >> w) || (rec >> extra))
      throw Error(Errc::Format, "edge list line " + std::to_string(line_no) + ": expected \"u v w\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::Format, "edge list line " + std::to_string(line_no) + ": vertex out of range");
    if (!(w >= 0.0f) || !(w < kInf))
      throw Error(Errc::Format, "edge list line " + std::to_string(line_no) + ": weight must be finite and >= 0");
    if (u == v) continue;
    float& cell = d(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    if (w < cell) cell = w;
  }
  if (next_line())
    throw Error(Errc::SizeMismatch, "edge list: more than the declared " + std::to_string(m) + " edges");
  return d;
}

DistanceMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::array<char, 4> probe{};
  in.read(probe.data(), probe.size());
  const bool binary = in.gcount() == 4 && probe == kMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_distance_binary(in) : read_edge_list(in);
}

PathMatrix read_path_matrix(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return read_path_binary(in);
}

}  // namespace apsp
