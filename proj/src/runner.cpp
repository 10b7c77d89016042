#include "rsg/runner.hpp"

#include <map>

#include "rsg/io.hpp"
#include "rsg/parallel.hpp"

namespace rsg {

namespace {

constexpr std::int64_t kChunk = 4096;

}  // namespace

std::string sample_records(const ModelParams& params, std::int64_t samples, std::uint64_t seed,
                           int threads, bool csv) {
  params.validate();
  auto chunks = run_chunked<std::string>(
      samples, kChunk, threads, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        std::string block;
        block.reserve(static_cast<std::size_t>(end - begin) * 96);
        for (std::int64_t i = begin; i < end; ++i) {
          RngStream stream = RngStream::substream(seed, static_cast<std::uint64_t>(i));
          const SurfaceSummary s = summarize(build_instance(params, stream));
          block += csv ? csv_summary_row(params, seed, i, s) : jsonl_summary(params, seed, i, s);
        }
        return block;
      });
  std::string out;
  if (csv) out = csv_summary_header();
  for (const std::string& block : chunks) out += block;
  return out;
}

namespace {

struct DistTally {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> joint;
  MomentAccumulator moments;

  void merge(const DistTally& other) {
    for (const auto& [key, count] : other.joint) joint[key] += count;
    moments.merge(other.moments);
  }
};

}  // namespace

DistOutput run_dist(const ModelParams& params, std::int64_t samples, std::uint64_t seed,
                    int threads) {
  params.validate();
  if (samples < 2) throw std::invalid_argument("run_dist: need at least 2 samples");

  const bool normalizable = params.m >= 2 && params.n >= 3;
  ExperimentPlan plan;
  if (normalizable) plan = ExperimentPlan::make(params, samples, seed);

  auto partials = run_chunked<DistTally>(
      samples, kChunk, threads, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        DistTally tally;
        for (std::int64_t i = begin; i < end; ++i) {
          RngStream stream = RngStream::substream(seed, static_cast<std::uint64_t>(i));
          const SurfaceSummary s = summarize(build_instance(params, stream));
          ++tally.joint[{s.B, s.genus}];
          tally.moments.add(s.B, s.genus);
        }
        return tally;
      });
  DistTally all;
  for (const DistTally& t : partials) all.merge(t);

  DistOutput out;
  out.report = all.moments.report();
  out.moments_json = moment_report_json(out.report);

  std::string& csv = out.csv;
  csv += "# model=" + std::string(to_string(params.kind)) + " n=" + std::to_string(params.n) +
         " m=" + std::to_string(params.m) + " t=" + std::to_string(params.t) +
         " seed=" + std::to_string(seed) + " samples=" + std::to_string(samples) + "\n";
  if (normalizable) {
    csv += "# natural_log=true log_m=" + fmt_double(plan.b_center) +
           " sqrt_log_m=" + fmt_double(plan.b_scale) +
           " genus_center=" + fmt_double(plan.g_center) +
           " genus_scale=" + fmt_double(plan.g_scale) + " r=" + fmt_double(plan.r) + "\n";
  } else {
    csv += "# normalization omitted (needs m >= 2 and n >= 3)\n";
  }
  csv += "table,B,genus,b_hat,g_hat,count\n";

  std::map<std::int64_t, std::int64_t> marg_b, marg_g;
  for (const auto& [key, count] : all.joint) {
    marg_b[key.first] += count;
    marg_g[key.second] += count;
  }
  auto b_hat_of = [&](std::int64_t b) {
    return (static_cast<double>(b) - plan.b_center) / plan.b_scale;
  };
  auto g_hat_of = [&](std::int64_t g) {
    return (static_cast<double>(g) - plan.g_center) / plan.g_scale;
  };
  for (const auto& [key, count] : all.joint) {
    csv += "joint," + std::to_string(key.first) + ',' + std::to_string(key.second) + ',';
    if (normalizable)
      csv += fmt_double(b_hat_of(key.first)) + "," + fmt_double(g_hat_of(key.second));
    else
      csv += ",";
    csv += ',' + std::to_string(count) + '\n';
  }
  for (const auto& [b, count] : marg_b) {
    csv += "B," + std::to_string(b) + ",,";
    if (normalizable) csv += fmt_double(b_hat_of(b));
    csv += ",," + std::to_string(count) + '\n';
  }
  for (const auto& [g, count] : marg_g) {
    csv += "genus,," + std::to_string(g) + ",,";
    if (normalizable) csv += fmt_double(g_hat_of(g));
    csv += ',' + std::to_string(count) + '\n';
  }
  return out;
}

}  // namespace rsg
