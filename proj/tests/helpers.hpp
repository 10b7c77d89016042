#pragma once

#include <initializer_list>
#include <numeric>
#include <vector>

#include "rsg/perm.hpp"

namespace rsg::testing {

// Builds a permutation from 1-based cycle notation, e.g. {{1, 2}, {3, 4}}.
inline Permutation perm_from_cycles(std::size_t n,
                                    std::initializer_list<std::initializer_list<int>> cycle_list) {
  std::vector<label_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& cyc : cycle_list) {
    std::vector<int> c(cyc);
    for (std::size_t i = 0; i < c.size(); ++i)
      img[static_cast<std::size_t>(c[i] - 1)] = static_cast<label_t>(c[(i + 1) % c.size()] - 1);
  }
  return Permutation::from_images(std::move(img));
}

inline Matching matching_from_pairs(std::size_t n,
                                    std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<label_t> partner(n);
  for (const auto& [a, b] : pairs) {
    partner[static_cast<std::size_t>(a - 1)] = static_cast<label_t>(b - 1);
    partner[static_cast<std::size_t>(b - 1)] = static_cast<label_t>(a - 1);
  }
  return Matching::from_partner(std::move(partner));
}

}  // namespace rsg::testing
