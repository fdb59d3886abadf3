#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "apsp/bench.hpp"

namespace apsp::bench {

/// Header line of every CSV report.
inline constexpr std::string_view kCsvHeader = "variant,kernel,n,bs,workers,seed,reps,wall_time_s,gflops,verified";

/// Header plus one line per record, LF line endings. Times are written with
/// full double precision so gflops can be recomputed from the file. Throws
/// Errc::Config on an empty record list, Errc::Io on write failure.
void emit_csv(std::span<const BenchRecord> records, std::ostream& out);
void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path);

/// Parses what emit_csv writes. Throws Errc::Format on malformed input.
std::vector<BenchRecord> parse_csv(std::istream& in);

/// Aligned variant ladder: one row per record with speedup relative to the
/// first row.
void emit_table(std::span<const BenchRecord> records, std::ostream& out);

}  // namespace apsp::bench
