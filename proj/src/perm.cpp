#include "rsg/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace rsg {

Permutation Permutation::identity(std::size_t n) {
  std::vector<label_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  return from_images_unchecked(std::move(img));
}

Permutation Permutation::from_images(std::vector<label_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (label_t v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<label_t> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: permutations act on different carriers");
  std::vector<label_t> img(p.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = p(q(static_cast<label_t>(k)));
  return Permutation::from_images_unchecked(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<label_t> img(p.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[p(static_cast<label_t>(k))] = static_cast<label_t>(k);
  return Permutation::from_images_unchecked(std::move(img));
}

std::size_t cycle_count(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    for (label_t x = static_cast<label_t>(start); !seen[x]; x = p(x)) seen[x] = true;
  }
  return count;
}

int sign(const Permutation& p) {
  return (p.size() - cycle_count(p)) % 2 == 0 ? +1 : -1;
}

CycleDecomposition cycles(const Permutation& p) {
  const std::size_t n = p.size();
  CycleDecomposition d;
  d.min_indicators.assign(n, false);
  std::vector<bool> seen(n, false);
  // Scanning labels in increasing order starts every cycle at its minimum
  // and emits cycles sorted by minimum.
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<label_t> cyc;
    for (label_t x = static_cast<label_t>(start); !seen[x]; x = p(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    d.min_indicators[start] = true;
    d.cycles.push_back(std::move(cyc));
  }
  d.count = d.cycles.size();
  return d;
}

std::string to_cycle_string(const CycleDecomposition& d) {
  std::string out;
  for (const auto& cyc : d.cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) { return to_cycle_string(cycles(p)); }

Matching Matching::from_partner(std::vector<label_t> partner) {
  const std::size_t n = partner.size();
  if (n % 2 != 0) throw std::invalid_argument("matching requires an even number of darts");
  for (std::size_t k = 0; k < n; ++k) {
    const label_t v = partner[k];
    if (v >= n || v == k || partner[v] != k)
      throw std::invalid_argument("matching is not a fixed-point-free involution");
  }
  return from_partner_unchecked(std::move(partner));
}

Matching Matching::from_partner_unchecked(std::vector<label_t> partner) {
  Matching m;
  m.partner_ = std::move(partner);
  return m;
}

Permutation Matching::as_permutation() const {
  return Permutation::from_images_unchecked(partner_);
}

Matching sample_matching(std::size_t n, RngStream& stream) {
  if (n % 2 != 0 || n == 0)
    throw std::invalid_argument("sample_matching: odd dart count leaves a dart unmatched");
  std::vector<label_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  shuffle(order, stream);
  std::vector<label_t> partner(n);
  for (std::size_t i = 0; i < n; i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }
  return Matching::from_partner_unchecked(std::move(partner));
}

Permutation sample_uniform_permutation(std::size_t n, RngStream& stream) {
  if (n == 0) throw std::invalid_argument("sample_uniform_permutation: empty carrier");
  std::vector<label_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  shuffle(img, stream);
  return Permutation::from_images_unchecked(std::move(img));
}

SplitCounts min_indicator_process(const Permutation& p, std::size_t split) {
  const std::size_t n = p.size();
  if (split > n) throw std::invalid_argument("min_indicator_process: split exceeds carrier size");
  std::vector<bool> seen(n, false);
  SplitCounts counts;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // start is the cycle minimum.
    (start < split ? counts.boundary : counts.internal) += 1;
    for (label_t x = static_cast<label_t>(start); !seen[x]; x = p(x)) seen[x] = true;
  }
  return counts;
}

Permutation parity_fix(const Permutation& g, bool coin) {
  if (g.size() < 2) throw std::invalid_argument("parity_fix needs at least two labels");
  if (!coin) return g;
  std::vector<label_t> img(g.images().begin(), g.images().end());
  for (auto& v : img) {
    if (v == 0)
      v = 1;
    else if (v == 1)
      v = 0;
  }
  return Permutation::from_images_unchecked(std::move(img));
}

Permutation canonical_rotation_tgons(std::size_t n, std::size_t t) {
  if (t < 3) throw std::invalid_argument("polygons need at least 3 sides");
  if (n == 0) throw std::invalid_argument("polygon count must be positive");
  std::vector<label_t> img(n * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < t; ++j)
      img[i * t + j] = static_cast<label_t>(i * t + (j + 1) % t);
  return Permutation::from_images_unchecked(std::move(img));
}

Permutation canonical_rotation_ngon(std::size_t n) {
  if (n < 2) throw std::invalid_argument("polygon needs at least 2 sides");
  std::vector<label_t> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<label_t>((k + 1) % n);
  return Permutation::from_images_unchecked(std::move(img));
}

}  // namespace rsg
