#include "rsg/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rsg {

namespace {

constexpr std::size_t kMaxEnumerationDarts = 16;
constexpr std::int64_t kMaxCases = 10'000'000;

void enumerate_rec(std::vector<label_t>& partner, std::vector<bool>& paired, std::size_t n,
                   const std::function<void(const Matching&)>& fn) {
  std::size_t a = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (!paired[k]) {
      a = k;
      break;
    }
  }
  if (a == n) {
    fn(Matching::from_partner_unchecked(partner));
    return;
  }
  paired[a] = true;
  for (std::size_t b = a + 1; b < n; ++b) {
    if (paired[b]) continue;
    paired[b] = true;
    partner[a] = static_cast<label_t>(b);
    partner[b] = static_cast<label_t>(a);
    enumerate_rec(partner, paired, n, fn);
    paired[b] = false;
  }
  paired[a] = false;
}

}  // namespace

void enumerate_matchings(std::size_t n, const std::function<void(const Matching&)>& fn) {
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("enumerate_matchings: dart count must be even and positive");
  if (n > kMaxEnumerationDarts)
    throw std::invalid_argument("enumerate_matchings: guarded at 16 darts (15!! cases)");
  std::vector<label_t> partner(n, 0);
  std::vector<bool> paired(n, false);
  enumerate_rec(partner, paired, n, fn);
}

std::uint64_t matching_count(std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("matching_count: odd dart count");
  std::uint64_t c = 1;
  for (std::size_t k = n >= 1 ? n - 1 : 0; k >= 3; k -= 2) c *= k;
  return c;
}

bigint binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  bigint r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

std::map<std::tuple<std::int64_t, std::int64_t, bool>, double> ExactDistribution::as_table() const {
  std::map<std::tuple<std::int64_t, std::int64_t, bool>, double> out;
  for (const Row& r : rows) out[{r.B, r.genus, r.connected}] = r.probability;
  return out;
}

std::map<std::int64_t, double> ExactDistribution::marginal_B() const {
  std::map<std::int64_t, double> out;
  for (const Row& r : rows) out[r.B] += r.probability;
  return out;
}

std::map<std::int64_t, double> ExactDistribution::marginal_genus() const {
  std::map<std::int64_t, double> out;
  for (const Row& r : rows) out[r.genus] += r.probability;
  return out;
}

namespace {

// Lexicographic m-subsets of {0..domain-1}; fn receives each sorted subset.
void for_each_subset(std::size_t domain, std::size_t m,
                     const std::function<void(const std::vector<label_t>&)>& fn) {
  std::vector<label_t> subset(m);
  for (std::size_t i = 0; i < m; ++i) subset[i] = static_cast<label_t>(i);
  for (;;) {
    fn(subset);
    if (m == 0) return;
    // slot i can advance while subset[i] + (m - i) < domain
    std::size_t i = m - 1;
    while (subset[i] + (m - i) >= domain) {
      if (i == 0) return;
      --i;
    }
    ++subset[i];
    for (std::size_t j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

ExactDistribution exact_joint(const ModelParams& params) {
  params.validate();
  const auto N = static_cast<std::size_t>(params.matched_darts());
  const auto m = static_cast<std::size_t>(params.m);
  if (N > kMaxEnumerationDarts)
    throw std::invalid_argument("exact_joint: matched dart count exceeds the enumeration guard (16)");

  std::size_t placement_domain = 0;  // 0 = single canonical placement (T)
  switch (params.kind) {
    case ModelKind::T: break;
    case ModelKind::S: placement_domain = N + m; break;
    case ModelKind::Tprime:
    case ModelKind::Sprime: placement_domain = N; break;
  }
  const bigint placements =
      placement_domain == 0 ? bigint(1)
                            : binomial(static_cast<std::int64_t>(placement_domain),
                                       static_cast<std::int64_t>(m));
  const bigint cases = bigint(matching_count(N)) * placements;
  if (cases > kMaxCases)
    throw std::invalid_argument("exact_joint: " + cases.str() +
                                " cases exceed the 1e7 enumeration guard; use Monte Carlo");

  std::map<std::tuple<std::int64_t, std::int64_t, bool>, std::uint64_t> tally;
  auto run_placement = [&](const std::vector<label_t>& placement) {
    enumerate_matchings(N, [&](const Matching& beta) {
      const SurfaceSummary s = summarize(assemble_instance(params, placement, beta));
      ++tally[{s.B, s.genus, s.connected}];
    });
  };
  if (placement_domain == 0) {
    run_placement({});
  } else {
    for_each_subset(placement_domain, m, run_placement);
  }

  ExactDistribution dist;
  dist.total_cases = cases;
  for (const auto& [key, count] : tally) {
    ExactDistribution::Row row;
    std::tie(row.B, row.genus, row.connected) = key;
    const bigint g = boost::multiprecision::gcd(bigint(count), cases);
    row.numerator = bigint(count) / g;
    row.denominator = cases / g;
    row.probability = static_cast<double>(count) / cases.convert_to<double>();
    dist.rows.push_back(std::move(row));
  }
  return dist;
}

StirlingRow stirling_first(std::int64_t m) {
  if (m < 1 || m > 64)
    throw std::invalid_argument("stirling_first: m must lie in [1, 64]");
  std::vector<bigint> row{1};  // [1 1]
  for (std::int64_t mm = 2; mm <= m; ++mm) {
    std::vector<bigint> next(static_cast<std::size_t>(mm));
    for (std::int64_t b = 1; b <= mm; ++b) {
      bigint v = 0;
      if (b >= 2) v += row[static_cast<std::size_t>(b - 2)];
      if (b <= mm - 1) v += (mm - 1) * row[static_cast<std::size_t>(b - 1)];
      next[static_cast<std::size_t>(b - 1)] = std::move(v);
    }
    row = std::move(next);
  }
  return StirlingRow{m, std::move(row)};
}

HarmonicRefs harmonic_refs(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("harmonic_refs: m must be positive");
  HarmonicRefs refs;
  for (std::int64_t k = m; k >= 1; --k) {  // small terms first
    const double x = 1.0 / static_cast<double>(k);
    refs.h += x;
    refs.h2 += x * x;
  }
  return refs;
}

std::map<std::int64_t, double> parity_conditioned_cycle_dist(std::int64_t N, Parity parity) {
  if (N < 2 || N > 64)
    throw std::invalid_argument("parity_conditioned_cycle_dist: N must lie in [2, 64]");
  const StirlingRow row = stirling_first(N);
  bigint fact = 0;
  for (const bigint& v : row.values) fact += v;  // row sum = N!
  const double half = fact.convert_to<double>() / 2.0;

  std::map<std::int64_t, double> dist;
  for (std::int64_t c = 1; c <= N; ++c) {
    const bool even_class = (N - c) % 2 == 0;
    if (even_class != (parity == Parity::even)) continue;
    dist[c] = row.values[static_cast<std::size_t>(c - 1)].convert_to<double>() / half;
  }
  return dist;
}

}  // namespace rsg
