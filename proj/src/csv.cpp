#include "fdnoma/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "fdnoma/errors.hpp"

namespace fdnoma {

std::string format_real(double value) {
  if (!std::isfinite(value)) throw NumericError(NumericErrorKind::kDomain, "csv: non-finite value");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << kSweepCsvHeader << '\n';
  for (const auto& series : result.series) {
    for (const auto& p : series.points) {
      out << result.scenario << ',' << series.mode << ',' << result.x_name << ','
          << format_real(p.x) << ',' << result.metric << ',' << format_real(p.mean) << ','
          << format_real(p.ci_half) << ',' << result.trials << ',' << result.seed << '\n';
    }
  }
}

void write_region_csv(std::ostream& out, const RateRegion& region, const RegionCsvContext& ctx,
                      bool header) {
  if (header) out << kRegionCsvHeader << '\n';
  const std::string ith = ctx.ith_db ? format_real(*ctx.ith_db) : std::string();
  auto row = [&](std::string_view scheme, double r2, const std::string& r1, bool feasible) {
    out << region.scenario << ',' << scheme << ',' << format_real(r2) << ',' << r1 << ','
        << (feasible ? "true" : "false") << ',' << ith << ',' << region.trials << ','
        << region.seed << '\n';
  };
  for (const auto& p : region.points) {
    row(region.scheme, p.r2_target, p.feasible ? format_real(p.r1_max) : std::string(), p.feasible);
  }
  if (ctx.tdm) {
    row("tdm", 0.0, format_real(ctx.tdm->r1_intercept), true);
    row("tdm", ctx.tdm->r2_intercept, format_real(0.0), true);
  }
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    f << contents;
    f.flush();
    if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into '" + path.string() + "': " + ec.message());
  }
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_real(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace fdnoma
