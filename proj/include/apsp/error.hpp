#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apsp {

enum class Errc {
  Divisibility,   // n not a multiple of the block size
  Range,          // block or vertex coordinates out of range
  Format,         // malformed file header or record
  SizeMismatch,   // payload length disagrees with the header
  Truncated,      // payload ends early
  Io,             // open/read/write failure
  Config,         // invalid run configuration or usage
  Corruption,     // inconsistent path matrix
  Resource,       // allocation or thread creation failure
  OracleLimit,    // input too large for a brute-force oracle
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace apsp
