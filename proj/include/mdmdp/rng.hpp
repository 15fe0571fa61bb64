#pragma once

#include <cstdint>
#include <string_view>

namespace mdmdp {

// Deterministic 64-bit generator (splitmix64). All randomness in the library
// flows through this so that runs are reproducible across platforms and
// standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Stable stream derivation: one root seed, independent streams per purpose
// tag (and optional index). Documented split scheme:
//   stream(root, tag, k) = splitmix64(root ^ fnv1a64(tag) ^ k*0x9e3779b97f4a7c15)
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                                 std::uint64_t index = 0) {
  Rng r(root ^ fnv1a64(tag) ^ (index * 0x9e3779b97f4a7c15ULL));
  return r.next();
}

}  // namespace mdmdp
