#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rsg {

// Default master seed for CLI runs; fixed so runs are reproducible by default.
inline constexpr std::uint64_t kDefaultSeed = 0xD1CE5EEDull;

// splitmix64 finalizer, used only to derive substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic random stream. Substream i of a master seed is mt19937_64
// seeded with mix64(master ^ mix64(i+1)), so per-sample substreams agree bit
// for bit between serial and parallel runs. Bounded draws use rejection
// instead of std::uniform_int_distribution, whose output is
// implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream substream(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(mix64(master_seed ^ mix64(index + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform on [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Fisher-Yates from the top index down. The draw order is part of the
// reproducibility contract, so do not change it.
template <class T>
void shuffle(std::vector<T>& v, RngStream& stream) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(stream.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

// Uniform m-subset of {0..n-1}, returned sorted. Partial Fisher-Yates.
std::vector<std::uint32_t> sample_subset(std::size_t n, std::size_t m, RngStream& stream);

}  // namespace rsg
