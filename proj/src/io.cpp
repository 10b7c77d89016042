#include "rsg/io.hpp"

#include <cmath>
#include <cstdio>

namespace rsg {

std::string fmt_double(double x) {
  if (std::isnan(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string jsonl_summary(const ModelParams& params, std::uint64_t seed, std::int64_t index,
                          const SurfaceSummary& s) {
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "{\"model\":\"%s\",\"n\":%lld,\"m\":%lld,\"t\":%lld,\"seed\":%llu,"
                "\"index\":%lld,\"B\":%lld,\"I\":%lld,\"genus\":%lld,\"chi\":%lld,"
                "\"components\":%lld,\"connected\":%s}\n",
                to_string(params.kind), static_cast<long long>(params.n),
                static_cast<long long>(params.m), static_cast<long long>(params.t),
                static_cast<unsigned long long>(seed), static_cast<long long>(index),
                static_cast<long long>(s.B), static_cast<long long>(s.I),
                static_cast<long long>(s.genus), static_cast<long long>(s.chi),
                static_cast<long long>(s.components), s.connected ? "true" : "false");
  return buf;
}

std::string csv_summary_header() {
  return "model,n,m,t,seed,index,B,I,genus,chi,components,connected\n";
}

std::string csv_summary_row(const ModelParams& params, std::uint64_t seed, std::int64_t index,
                            const SurfaceSummary& s) {
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%s,%lld,%lld,%lld,%llu,%lld,%lld,%lld,%lld,%lld,%lld,%s\n",
                to_string(params.kind), static_cast<long long>(params.n),
                static_cast<long long>(params.m), static_cast<long long>(params.t),
                static_cast<unsigned long long>(seed), static_cast<long long>(index),
                static_cast<long long>(s.B), static_cast<long long>(s.I),
                static_cast<long long>(s.genus), static_cast<long long>(s.chi),
                static_cast<long long>(s.components), s.connected ? "true" : "false");
  return buf;
}

std::string exact_distribution_csv(const ExactDistribution& dist) {
  std::string out = "B,genus,connected,numerator,denominator\n";
  for (const auto& row : dist.rows) {
    out += std::to_string(row.B);
    out += ',';
    out += std::to_string(row.genus);
    out += ',';
    out += row.connected ? "true" : "false";
    out += ',';
    out += row.numerator.str();
    out += ',';
    out += row.denominator.str();
    out += '\n';
  }
  return out;
}

std::string moment_report_json(const MomentReport& r) {
  std::string out = "{";
  out += "\"K\":" + std::to_string(r.K);
  out += ",\"mean_B\":" + fmt_double(r.mean_B);
  out += ",\"se_mean_B\":" + fmt_double(r.se_mean_B);
  out += ",\"var_B\":" + fmt_double(r.var_B);
  out += ",\"se_var_B\":" + fmt_double(r.se_var_B);
  out += ",\"mean_G\":" + fmt_double(r.mean_G);
  out += ",\"se_mean_G\":" + fmt_double(r.se_mean_G);
  out += ",\"var_G\":" + fmt_double(r.var_G);
  out += ",\"se_var_G\":" + fmt_double(r.se_var_G);
  out += ",\"corr_BG\":" + (r.corr_defined ? fmt_double(r.corr_BG) : std::string("null"));
  out += ",\"se_corr_BG\":" + (r.corr_defined ? fmt_double(r.se_corr) : std::string("null"));
  out += "}";
  return out;
}

}  // namespace rsg
