#include "rsg/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rsg {

std::vector<std::uint32_t> sample_subset(std::size_t n, std::size_t m, RngStream& stream) {
  if (m > n) throw std::invalid_argument("sample_subset: m exceeds n");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace rsg
