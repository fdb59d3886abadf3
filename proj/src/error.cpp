#include "apsp/error.hpp"

namespace apsp {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Divisibility: return "divisibility";
    case Errc::Range: return "range";
    case Errc::Format: return "format";
    case Errc::SizeMismatch: return "size-mismatch";
    case Errc::Truncated: return "truncated";
    case Errc::Io: return "io";
    case Errc::Config: return "config";
    case Errc::Corruption: return "corruption";
    case Errc::Resource: return "resource";
    case Errc::OracleLimit: return "oracle-limit";
  }
  return "unknown";
}

}  // namespace apsp
