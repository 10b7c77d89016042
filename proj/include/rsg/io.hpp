#pragma once

#include <cstdint>
#include <string>

#include "rsg/models.hpp"
#include "rsg/oracle.hpp"
#include "rsg/stats.hpp"

namespace rsg {

// "%.17g"; "null" for NaN (JSON has no NaN).
std::string fmt_double(double x);

// One JSON object per line, fixed field order:
// {"model","n","m","t","seed","index","B","I","genus","chi","components","connected"}
std::string jsonl_summary(const ModelParams& params, std::uint64_t seed, std::int64_t index,
                          const SurfaceSummary& s);

// CSV row matching the JSONL field order (header in csv_summary_header).
std::string csv_summary_header();
std::string csv_summary_row(const ModelParams& params, std::uint64_t seed, std::int64_t index,
                            const SurfaceSummary& s);

// Columns: B,genus,connected,numerator,denominator.
std::string exact_distribution_csv(const ExactDistribution& dist);

std::string moment_report_json(const MomentReport& report);

}  // namespace rsg
