#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sss {

// Deterministic random source with labeled substream derivation. Every
// piece of randomness in a protocol run flows from one root seed, so a
// transcript can be replayed bit-exactly. derive() hashes the parent seed
// with a label and returns an independent stream; it does not consume
// state from the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

  Rng derive(std::string_view label) const {
    // FNV-1a over the label, folded into the parent seed.
    std::uint64_t h = 14695981039346656037ull ^ seed_;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    return Rng(mix(h));
  }

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound > 0. Rejection sampling keeps the
  // distribution exact and independent of the standard library's
  // uniform_int_distribution implementation.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  double unit() { return (eng_() >> 11) * 0x1.0p-53; }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace sss
