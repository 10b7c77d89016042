#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "rsg/models.hpp"
#include "rsg/rng.hpp"

namespace rsg {

// A sampling experiment plus the limit-law normalization derived from it.
// Natural logarithms throughout.
struct ExperimentPlan {
  ModelParams params;
  std::int64_t samples = 0;
  std::uint64_t master_seed = kDefaultSeed;

  double r = 0;         // sqrt(log m / log n)
  double b_center = 0;  // log m
  double b_scale = 0;   // sqrt(log m)
  double g_center = 0;  // n/4 - log(n)/2
  double g_scale = 0;   // sqrt(log n)/2

  // Requires samples >= 2 and m >= 2, n >= 3 so both scales are positive.
  static ExperimentPlan make(const ModelParams& params, std::int64_t samples,
                             std::uint64_t master_seed);
};

struct NormalizedPair {
  double b_hat = 0;
  double g_hat = 0;
};

NormalizedPair normalize(const SurfaceSummary& summary, const ExperimentPlan& plan);

struct MomentReport {
  std::int64_t K = 0;
  double mean_B = 0, var_B = 0, mean_G = 0, var_G = 0;
  double corr_BG = 0;        // NaN when undefined (constant input)
  bool corr_defined = false;
  double se_mean_B = 0, se_mean_G = 0, se_var_B = 0, se_var_G = 0;
  double se_corr = 0;        // (1 - rho^2)/sqrt(K)
};

// Single-pass mergeable tally over integer (B, genus) pairs. All sums are
// integer-exact, so merge order cannot change the report.
class MomentAccumulator {
 public:
  void add(std::int64_t b, std::int64_t g);
  void merge(const MomentAccumulator& other);
  std::int64_t count() const { return count_; }
  MomentReport report() const;  // requires K >= 2

 private:
  std::int64_t count_ = 0;
  std::int64_t sum_b_ = 0, sum_g_ = 0;
  __int128 sumsq_b_ = 0, sumsq_g_ = 0, sum_bg_ = 0;
};

MomentReport empirical_moments(std::span<const std::pair<std::int64_t, std::int64_t>> pairs);

// Exact finite-size reference values for the primed models under the uniform
// permutation law: E[B] = H_m, Var[B] = H_m - H_m^(2), genus through the
// affine Euler relation, and the anti-correlation they induce.
struct FiniteSizeTargets {
  double e_b = 0, var_b = 0;
  double e_g = 0, var_g = 0;
  double var_i = 0;
  double corr = 0;  // -sqrt(Var_B / (Var_B + Var_I))
};

FiniteSizeTargets finite_size_targets(const ModelParams& params);

double normal_cdf(double x);

// One-sample Kolmogorov-Smirnov statistic against the standard normal:
// D = max_i max(i/K - F(x_i), F(x_i) - (i-1)/K) over the sorted sample.
double ks_statistic(std::vector<double> values);

struct ChiSquareResult {
  double statistic = 0;
  std::int64_t dof = 0;
};

// Pearson chi-square; categories with expected count below 5 are pooled.
// Observed categories must appear in the expected table.
ChiSquareResult chi_square(const std::map<std::int64_t, std::int64_t>& observed,
                           const std::map<std::int64_t, double>& expected);

// Half L1 distance between two probability tables over a common countable
// support. On a projected statistic this lower-bounds the total variation
// distance of the full laws.
template <class Key>
double tv_distance(const std::map<Key, double>& p, const std::map<Key, double>& q) {
  double sum = 0;
  auto it_p = p.begin();
  auto it_q = q.begin();
  while (it_p != p.end() || it_q != q.end()) {
    if (it_q == q.end() || (it_p != p.end() && it_p->first < it_q->first)) {
      sum += std::abs(it_p->second);
      ++it_p;
    } else if (it_p == p.end() || it_q->first < it_p->first) {
      sum += std::abs(it_q->second);
      ++it_q;
    } else {
      sum += std::abs(it_p->second - it_q->second);
      ++it_p;
      ++it_q;
    }
  }
  return sum / 2;
}

// Samples K closed instances (m = 0) of the given model at order N, projects
// gamma = rotation o matching onto its cycle count, and returns the distance
// to the exact parity-conditioned reference law. N <= 64.
double gamma_uniformity_check(std::int64_t N, ModelKind model, std::int64_t K,
                              std::uint64_t master_seed = kDefaultSeed, int threads = 1);

}  // namespace rsg
