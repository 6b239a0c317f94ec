#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace textpoison {

// Self-contained 64-bit generator (splitmix64). Distributions are implemented
// here rather than via <random> so byte-identical outputs do not depend on the
// standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform integer in [0, bound); bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  std::size_t index(std::size_t size) {
    return static_cast<std::size_t>(next_below(size));
  }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

// Named substream of the global seed ("split", "sample", "trigger", "train").
inline std::uint64_t substream(std::uint64_t seed, std::string_view name) {
  return seed ^ fnv1a(name);
}

// Per-item stream, e.g. per-document trigger seeds: seed XOR document index.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return seed ^ index;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = rng.index(i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace textpoison
