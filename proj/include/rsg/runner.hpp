#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rsg/models.hpp"
#include "rsg/stats.hpp"

namespace rsg {

// Renders `samples` sampled surface records, one line each. Sample i is a
// deterministic function of (params, seed, i); the thread count only changes
// the wall time, never a byte of the output.
std::string sample_records(const ModelParams& params, std::int64_t samples, std::uint64_t seed,
                           int threads, bool csv);

// Streaming form: writes the same bytes in bounded memory, flushing after
// each wave of whole lines, so an interrupted run leaves a prefix-valid file.
void write_sample_records(std::ostream& out, const ModelParams& params, std::int64_t samples,
                          std::uint64_t seed, int threads, bool csv);

struct DistOutput {
  std::string csv;           // joint + marginal histograms, header echoes the constants
  MomentReport report;
  std::string moments_json;
};

// Runs the experiment and folds it into histograms and a moment report.
// Requires samples >= 2; the normalized columns appear when m >= 2 and n >= 3.
DistOutput run_dist(const ModelParams& params, std::int64_t samples, std::uint64_t seed,
                    int threads);

}  // namespace rsg
