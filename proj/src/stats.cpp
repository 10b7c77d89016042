#include "rsg/stats.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rsg/oracle.hpp"
#include "rsg/parallel.hpp"

namespace rsg {

ExperimentPlan ExperimentPlan::make(const ModelParams& params, std::int64_t samples,
                                    std::uint64_t master_seed) {
  params.validate();
  if (samples < 2) throw std::invalid_argument("ExperimentPlan: need at least 2 samples");
  if (params.m < 2 || params.n < 3)
    throw std::invalid_argument("ExperimentPlan: normalization undefined for m < 2 or n < 3");
  ExperimentPlan plan;
  plan.params = params;
  plan.samples = samples;
  plan.master_seed = master_seed;
  const double log_m = std::log(static_cast<double>(params.m));
  const double log_n = std::log(static_cast<double>(params.n));
  plan.r = std::sqrt(log_m / log_n);
  plan.b_center = log_m;
  plan.b_scale = std::sqrt(log_m);
  plan.g_center = static_cast<double>(params.n) / 4.0 - log_n / 2.0;
  plan.g_scale = std::sqrt(log_n) / 2.0;
  return plan;
}

NormalizedPair normalize(const SurfaceSummary& summary, const ExperimentPlan& plan) {
  NormalizedPair p;
  p.b_hat = (static_cast<double>(summary.B) - plan.b_center) / plan.b_scale;
  p.g_hat = (static_cast<double>(summary.genus) - plan.g_center) / plan.g_scale;
  return p;
}

void MomentAccumulator::add(std::int64_t b, std::int64_t g) {
  ++count_;
  sum_b_ += b;
  sum_g_ += g;
  sumsq_b_ += static_cast<__int128>(b) * b;
  sumsq_g_ += static_cast<__int128>(g) * g;
  sum_bg_ += static_cast<__int128>(b) * g;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  count_ += other.count_;
  sum_b_ += other.sum_b_;
  sum_g_ += other.sum_g_;
  sumsq_b_ += other.sumsq_b_;
  sumsq_g_ += other.sumsq_g_;
  sum_bg_ += other.sum_bg_;
}

MomentReport MomentAccumulator::report() const {
  if (count_ < 2) throw std::invalid_argument("moment report needs at least 2 samples");
  MomentReport r;
  r.K = count_;
  const double k = static_cast<double>(count_);
  r.mean_B = static_cast<double>(sum_b_) / k;
  r.mean_G = static_cast<double>(sum_g_) / k;

  // K*sum(x^2) - sum(x)^2 = K*(K-1)*var, computed exactly in 128-bit.
  const __int128 var_num_b = static_cast<__int128>(count_) * sumsq_b_ -
                             static_cast<__int128>(sum_b_) * sum_b_;
  const __int128 var_num_g = static_cast<__int128>(count_) * sumsq_g_ -
                             static_cast<__int128>(sum_g_) * sum_g_;
  const __int128 cov_num = static_cast<__int128>(count_) * sum_bg_ -
                           static_cast<__int128>(sum_b_) * sum_g_;
  const double denom = k * (k - 1);
  r.var_B = static_cast<double>(var_num_b) / denom;
  r.var_G = static_cast<double>(var_num_g) / denom;

  r.corr_defined = var_num_b > 0 && var_num_g > 0;
  if (r.corr_defined) {
    r.corr_BG = static_cast<double>(cov_num) /
                std::sqrt(static_cast<double>(var_num_b) * static_cast<double>(var_num_g));
    r.se_corr = (1.0 - r.corr_BG * r.corr_BG) / std::sqrt(k);
  } else {
    r.corr_BG = std::numeric_limits<double>::quiet_NaN();
    r.se_corr = std::numeric_limits<double>::quiet_NaN();
  }
  r.se_mean_B = std::sqrt(r.var_B / k);
  r.se_mean_G = std::sqrt(r.var_G / k);
  r.se_var_B = r.var_B * std::sqrt(2.0 / (k - 1));
  r.se_var_G = r.var_G * std::sqrt(2.0 / (k - 1));
  return r;
}

MomentReport empirical_moments(std::span<const std::pair<std::int64_t, std::int64_t>> pairs) {
  MomentAccumulator acc;
  for (const auto& [b, g] : pairs) acc.add(b, g);
  return acc.report();
}

FiniteSizeTargets finite_size_targets(const ModelParams& params) {
  params.validate();
  if (!params.primed())
    throw std::invalid_argument(
        "finite_size_targets: only the primed models have a uniform reference; "
        "compare unprimed models by Monte Carlo");
  const std::int64_t N = params.matched_darts();
  const std::int64_t m = params.m;
  const HarmonicRefs hN = harmonic_refs(N);
  const HarmonicRefs hm = m >= 1 ? harmonic_refs(m) : HarmonicRefs{};

  FiniteSizeTargets t;
  t.e_b = hm.h;
  t.var_b = hm.h - hm.h2;
  t.var_i = (hN.h - hm.h) - (hN.h2 - hm.h2);
  // Euler relation with all m boundary vertices present:
  //   Sprime: G = n/4 + 1/2 - (B+I)/2
  //   Tprime: G = t*n/4 - n/2 + 1 - (B+I)/2
  const double n = static_cast<double>(params.n);
  if (params.kind == ModelKind::Sprime) {
    t.e_g = n / 4.0 + 0.5 - hN.h / 2.0;
  } else {
    t.e_g = static_cast<double>(params.t) * n / 4.0 - n / 2.0 + 1.0 - hN.h / 2.0;
  }
  t.var_g = (t.var_b + t.var_i) / 4.0;
  t.corr = -std::sqrt(t.var_b / (t.var_b + t.var_i));
  return t;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_statistic(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(values.begin(), values.end());
  const double k = static_cast<double>(values.size());
  double d = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = normal_cdf(values[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1) / k - f,
                             f - static_cast<double>(i) / k));
  }
  return d;
}

ChiSquareResult chi_square(const std::map<std::int64_t, std::int64_t>& observed,
                           const std::map<std::int64_t, double>& expected) {
  std::int64_t total = 0;
  for (const auto& [cat, count] : observed) {
    if (count < 0) throw std::invalid_argument("chi_square: negative count");
    if (!expected.contains(cat))
      throw std::invalid_argument("chi_square: observed category missing from the expected table");
    total += count;
  }
  if (total < 1) throw std::invalid_argument("chi_square: no observations");
  double p_total = 0;
  for (const auto& [cat, p] : expected) p_total += p;
  if (std::abs(p_total - 1.0) > 1e-9)
    throw std::invalid_argument("chi_square: expected probabilities must sum to 1");

  // Pool categories whose expected count falls below 5; a still-small pool is
  // folded into the smallest retained category.
  std::vector<std::pair<double, double>> cells;  // (observed, expected) counts
  double pool_obs = 0, pool_exp = 0;
  for (const auto& [cat, p] : expected) {
    const double e = p * static_cast<double>(total);
    const auto it = observed.find(cat);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    if (e < 5.0) {
      pool_obs += o;
      pool_exp += e;
    } else {
      cells.emplace_back(o, e);
    }
  }
  if (pool_exp > 0) {
    if (pool_exp >= 5.0 || cells.empty()) {
      cells.emplace_back(pool_obs, pool_exp);
    } else {
      auto smallest = std::min_element(cells.begin(), cells.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
      smallest->first += pool_obs;
      smallest->second += pool_exp;
    }
  }

  ChiSquareResult res;
  res.dof = static_cast<std::int64_t>(cells.size()) - 1;
  for (const auto& [o, e] : cells) {
    const double d = o - e;
    res.statistic += d * d / e;
  }
  return res;
}

double gamma_uniformity_check(std::int64_t N, ModelKind model, std::int64_t K,
                              std::uint64_t master_seed, int threads) {
  if (N < 2 || N > 64)
    throw std::invalid_argument("gamma_uniformity_check: N must lie in [2, 64]");
  if (K < 1) throw std::invalid_argument("gamma_uniformity_check: K must be positive");

  ModelParams params;
  params.m = 0;
  if (model == ModelKind::Sprime) {
    params.kind = ModelKind::Sprime;
    params.n = N;
  } else if (model == ModelKind::Tprime) {
    if (N % 3 != 0 || N / 3 < 2)
      throw std::invalid_argument("gamma_uniformity_check: Tprime needs N = 3n with n >= 2");
    params.kind = ModelKind::Tprime;
    params.n = N / 3;
    params.t = 3;
  } else {
    throw std::invalid_argument("gamma_uniformity_check: model must be Tprime or Sprime");
  }
  params.validate();

  const Permutation alpha = params.single_polygon()
                                ? canonical_rotation_ngon(static_cast<std::size_t>(N))
                                : canonical_rotation_tgons(static_cast<std::size_t>(params.n), 3);
  const Parity parity = sign(alpha) * ((N / 2) % 2 == 0 ? 1 : -1) > 0 ? Parity::even : Parity::odd;
  const auto reference = parity_conditioned_cycle_dist(N, parity);

  using Hist = std::map<std::int64_t, std::int64_t>;
  auto partials = run_chunked<Hist>(
      K, 8192, threads, [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        Hist h;
        std::vector<bool> seen(static_cast<std::size_t>(N));
        for (std::int64_t i = begin; i < end; ++i) {
          RngStream stream = RngStream::substream(master_seed, static_cast<std::uint64_t>(i));
          const Matching beta = sample_matching(static_cast<std::size_t>(N), stream);
          std::fill(seen.begin(), seen.end(), false);
          std::int64_t cycles = 0;
          for (std::size_t start = 0; start < static_cast<std::size_t>(N); ++start) {
            if (seen[start]) continue;
            ++cycles;
            label_t x = static_cast<label_t>(start);
            while (!seen[x]) {
              seen[x] = true;
              x = alpha(beta.partner(x));
            }
          }
          ++h[cycles];
        }
        return h;
      });

  Hist hist;
  for (const Hist& h : partials)
    for (const auto& [c, count] : h) hist[c] += count;

  std::map<std::int64_t, double> empirical;
  for (const auto& [c, count] : hist)
    empirical[c] = static_cast<double>(count) / static_cast<double>(K);
  return tv_distance(empirical, reference);
}

}  // namespace rsg
