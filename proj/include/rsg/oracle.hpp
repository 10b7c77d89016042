#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsg/models.hpp"
#include "rsg/perm.hpp"

namespace rsg {

using bigint = boost::multiprecision::cpp_int;

// Yields every fixed-point-free involution on {0..n-1} exactly once, pairing
// the smallest unpaired label with each larger label recursively. n <= 16
// (15!! = 2,027,025 matchings).
void enumerate_matchings(std::size_t n, const std::function<void(const Matching&)>& fn);

// (n-1)!! for even n.
std::uint64_t matching_count(std::size_t n);

bigint binomial(std::int64_t n, std::int64_t k);

struct ExactDistribution {
  struct Row {
    std::int64_t B = 0;
    std::int64_t genus = 0;
    bool connected = true;
    bigint numerator;    // reduced
    bigint denominator;  // reduced
    double probability = 0;
  };
  std::vector<Row> rows;  // sorted by (B, genus, connected)
  bigint total_cases;

  std::map<std::tuple<std::int64_t, std::int64_t, bool>, double> as_table() const;
  std::map<std::int64_t, double> marginal_B() const;
  std::map<std::int64_t, double> marginal_genus() const;
};

// Averages summarize() over all equally weighted cases: every matching of the
// matched darts times every boundary placement of the model family. Guarded
// at 1e7 cases; the error message names the case count.
ExactDistribution exact_joint(const ModelParams& params);

struct StirlingRow {
  std::int64_t m = 0;
  std::vector<bigint> values;  // [m 1] .. [m m], unsigned first kind
};

// Recurrence [m b] = [m-1 b-1] + (m-1)[m-1 b]; 1 <= m <= 64.
StirlingRow stirling_first(std::int64_t m);

struct HarmonicRefs {
  double h = 0;   // sum 1/k
  double h2 = 0;  // sum 1/k^2
};

HarmonicRefs harmonic_refs(std::int64_t m);

enum class Parity { even, odd };

// Cycle-count law of a uniform order-N permutation conditioned on parity:
// Stirling row N restricted to counts c with (-1)^(N-c) matching, each class
// renormalized by N!/2. Requires 2 <= N <= 64.
std::map<std::int64_t, double> parity_conditioned_cycle_dist(std::int64_t N, Parity parity);

}  // namespace rsg
