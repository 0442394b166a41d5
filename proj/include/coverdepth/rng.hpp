// Deterministic utilities: a SplitMix64 stream (identical output on every
// platform, unlike std distributions) and FNV-1a hashing for content keys.

#ifndef COVERDEPTH_RNG_HPP
#define COVERDEPTH_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace coverdepth {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); modulo bias is irrelevant at desk scale.
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  // Bernoulli with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

}  // namespace coverdepth

#endif
