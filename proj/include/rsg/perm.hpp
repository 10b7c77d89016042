#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsg/rng.hpp"

namespace rsg {

// Dart / side label. 0-based in memory; 1-based in every text format.
using label_t = std::uint32_t;

// Bijection on {0..N-1}, stored as an image sequence.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  // Validates that images is a bijection.
  static Permutation from_images(std::vector<label_t> images);
  // Trusted path for samplers and compositions that construct bijections.
  static Permutation from_images_unchecked(std::vector<label_t> images);

  label_t operator()(label_t k) const { return images_[k]; }
  std::size_t size() const { return images_.size(); }
  std::span<const label_t> images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<label_t> images_;
};

// k -> p(q(k)); q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// (-1)^(N - #cycles).
int sign(const Permutation& p);

struct CycleDecomposition {
  // Each cycle starts at its minimum; cycles are sorted by minimum.
  std::vector<std::vector<label_t>> cycles;
  std::size_t count = 0;
  // Bit k set iff k is the smallest label in its cycle.
  std::vector<bool> min_indicators;
};

CycleDecomposition cycles(const Permutation& p);
std::size_t cycle_count(const Permutation& p);

// Canonical text form, e.g. "(1 2 3)(4 5)(6)".
std::string to_cycle_string(const CycleDecomposition& d);
std::string to_cycle_string(const Permutation& p);

// Fixed-point-free involution on {0..N-1}, N even.
class Matching {
 public:
  Matching() = default;

  static Matching from_partner(std::vector<label_t> partner);
  static Matching from_partner_unchecked(std::vector<label_t> partner);

  label_t partner(label_t k) const { return partner_[k]; }
  std::size_t size() const { return partner_.size(); }
  std::span<const label_t> partners() const { return partner_; }
  Permutation as_permutation() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<label_t> partner_;
};

// Uniform over all (n-1)!! fixed-point-free involutions: shuffle the labels,
// pair consecutive entries. This is the normative sampling algorithm; the
// exact enumeration weights every matching equally against it.
Matching sample_matching(std::size_t n, RngStream& stream);

// Uniform over all n! permutations.
Permutation sample_uniform_permutation(std::size_t n, RngStream& stream);

struct SplitCounts {
  std::int64_t boundary = 0;  // cycles meeting {0..split-1}
  std::int64_t internal = 0;  // cycles contained in {split..N-1}
};

// Counts cycles by whether their minimum lands below the split.
SplitCounts min_indicator_process(const Permutation& p, std::size_t split);

// (1 2) o g when coin is set, else g. A fair coin makes the result equally
// likely even or odd.
Permutation parity_fix(const Permutation& g, bool coin);

// (1 2 .. t)(t+1 .. 2t)... on n polygons of t sides each, t >= 3.
Permutation canonical_rotation_tgons(std::size_t n, std::size_t t);
// The full cycle (1 2 .. n), n >= 2.
Permutation canonical_rotation_ngon(std::size_t n);

}  // namespace rsg
