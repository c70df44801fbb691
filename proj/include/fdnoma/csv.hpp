#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fdnoma/optimize.hpp"
#include "fdnoma/region.hpp"
#include "fdnoma/sweep.hpp"

namespace fdnoma {

inline constexpr std::string_view kSweepCsvHeader =
    "scenario,mode,x_name,x_value,metric,value,ci_half,trials,seed";
inline constexpr std::string_view kRegionCsvHeader =
    "scenario,scheme,r2_target,r1_max,feasible,ith,trials,seed";

/// Shortest-form-independent rendering: 17 significant digits, '.' decimal.
std::string format_real(double value);

void write_sweep_csv(std::ostream& out, const SweepResult& result);

/// Extra columns of a region block.
struct RegionCsvContext {
  /// Interference threshold in dB; empty for scenarios without one.
  std::optional<double> ith_db;
  /// Appends the two time-sharing endpoints as scheme "tdm".
  std::optional<TdmSegment> tdm;
};

/// Header only when `header` is true, so several regions share one file.
void write_region_csv(std::ostream& out, const RateRegion& region, const RegionCsvContext& ctx,
                      bool header = true);

/// Writes through a temporary sibling and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

/// Splits one CSV line on commas (no quoting is ever emitted).
std::vector<std::string> split_csv_line(std::string_view line);

/// Strict parse of a formatted real; throws ValidationError on trailing junk.
double parse_real(std::string_view text);

}  // namespace fdnoma
