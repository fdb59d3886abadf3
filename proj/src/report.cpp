#include "apsp/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "apsp/error.hpp"

namespace apsp::bench {
namespace {

void require_records(std::span<const BenchRecord> records) {
  if (records.empty()) throw Error(Errc::Config, "no benchmark records to report");
}

std::string_view kernel_label(const RunConfig& c) {
  return c.variant == Variant::Naive ? std::string_view("none") : to_string(c.kernel);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string& text, std::size_t line_no) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw Error(Errc::Format, "csv line " + std::to_string(line_no) + ": bad number \"" + text + "\"");
  return value;
}

}  // namespace

void emit_csv(std::span<const BenchRecord> records, std::ostream& out) {
  require_records(records);
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    const RunConfig& c = r.config;
    out << to_string(c.variant) << ',' << kernel_label(c) << ',' << c.n << ',' << c.bs << ',' << c.workers << ','
        << c.seed << ',' << c.reps << ',' << format_double(r.wall_time_s) << ',' << format_double(r.gflops) << ','
        << to_string(r.verified) << '\n';
  }
  if (!out) throw Error(Errc::Io, "csv write failed");
}

void emit_csv(std::span<const BenchRecord> records, const std::filesystem::path& path) {
  require_records(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot create " + path.string());
  emit_csv(records, out);
  out.flush();
  if (!out) throw Error(Errc::Io, "write failed: " + path.string());
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error(Errc::Format, "csv: missing or unexpected header");
  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw Error(Errc::Format, "csv line " + std::to_string(line_no) + ": expected 10 fields");
    BenchRecord r;
    RunConfig& c = r.config;
    c.variant = parse_variant(f[0]);
    c.kernel = f[1] == "none" ? KernelVariant::Scalar : parse_kernel(f[1]);
    c.n = parse_number<std::size_t>(f[2], line_no);
    c.bs = parse_number<std::size_t>(f[3], line_no);
    c.workers = parse_number<unsigned>(f[4], line_no);
    c.seed = parse_number<std::uint64_t>(f[5], line_no);
    c.reps = parse_number<unsigned>(f[6], line_no);
    r.wall_time_s = parse_number<double>(f[7], line_no);
    r.gflops = parse_number<double>(f[8], line_no);
    r.verified = parse_verified(f[9]);
    records.push_back(std::move(r));
  }
  return records;
}

void emit_table(std::span<const BenchRecord> records, std::ostream& out) {
  require_records(records);
  const double baseline = records.front().wall_time_s;
  out << std::left << std::setw(18) << "variant" << std::setw(8) << "kernel" << std::right << std::setw(7) << "n"
      << std::setw(6) << "bs" << std::setw(8) << "workers" << std::setw(13) << "time_s" << std::setw(11) << "gflops"
      << std::setw(10) << "speedup" << "  verified\n";
  for (const BenchRecord& r : records) {
    const RunConfig& c = r.config;
    const bool parallel = c.variant == Variant::BlockedParallel;
    out << std::left << std::setw(18) << to_string(c.variant) << std::setw(8) << kernel_label(c) << std::right
        << std::setw(7) << c.n << std::setw(6) << (c.variant == Variant::Naive ? std::string("-") : std::to_string(c.bs))
        << std::setw(8) << (parallel ? std::to_string(c.workers) : std::string("1")) << std::fixed
        << std::setprecision(4) << std::setw(13) << r.wall_time_s << std::setprecision(3) << std::setw(11) << r.gflops
        << std::setprecision(2) << std::setw(9) << baseline / r.wall_time_s << "x" << "  " << to_string(r.verified)
        << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace apsp::bench
