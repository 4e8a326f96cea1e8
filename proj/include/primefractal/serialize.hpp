// serialize.hpp - wire formats (JSON / CSV) and atomic file output.
//
// Exact quantities always serialize as decimal or "p/q" strings; floats
// appear only in log-log and chi-square fields. All emitters are
// byte-deterministic for identical inputs.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "primefractal/construction.hpp"
#include "primefractal/dimension.hpp"
#include "primefractal/measure.hpp"
#include "primefractal/stats.hpp"

namespace primefractal {

// {"base": m, "branch": k, "depth": n, "source": {...},
//  "numerators": ["35", "43", ...]}
std::string level_set_to_json(const LevelSet& ls);
LevelSet level_set_from_json(const std::string& text);

std::string bracket_json(const MeasureBracket& bracket, const QueryInterval& J);

// {"depth": n, "trials": t, "max_ratio_4th_power": "p/q",
//  "worst_interval": ["p/q", "p/q"], "bound_satisfied": bool}
std::string decay_report_json(const DecayReport& report);

std::string dimension_report_json(const DimensionReport& report,
                                  const ConstructionParams& params);

// Columns: n, scale ("1/m^n"), count (decimal string), log_ratio (float,
// blank at n = 0).
std::string box_series_csv(const BoxCountSeries& series);

// Columns: residue, count, frequency, expected, deviation (expected and
// deviation are blank for classes not coprime to the modulus).
std::string histogram_csv(const EquidistributionReport& report);

std::string equidistribution_json(const EquidistributionReport& report);

std::string member_json(const MemberVerdict& verdict, std::size_t depth);

// Writes via a temp file plus rename so readers never see partial output.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace primefractal
