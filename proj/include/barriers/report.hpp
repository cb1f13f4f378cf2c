#pragma once

#include <string>

#include "barriers/pipeline.hpp"

namespace barriers::report {

/// Full machine-readable bundle (sorted keys, deterministic bytes).
std::string report_json(const AnalysisReport& report);

/// Human-readable run summary: levels, quadrants, cause/effect split,
/// ranking, top causes by full name.
std::string summary_text(const AnalysisReport& report);

/// Writes every section present in the report to out_dir in the requested
/// formats (csv/json/dot), plus report.json and summary.txt. All writes are
/// atomic; filenames are fixed.
void emit(const AnalysisReport& report, const std::filesystem::path& out_dir,
          const std::set<std::string>& formats);

}  // namespace barriers::report
