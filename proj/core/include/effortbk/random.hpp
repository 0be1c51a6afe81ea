#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace effortbk {

// SplitMix64 finalizer. Used for all seed derivation so that results are
// bit-identical across platforms and standard library implementations.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent child seed from a master seed and ordered salts,
// e.g. derive_seed(master, {fold}) or derive_seed(seed, {level, position}).
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> salts) noexcept {
  std::uint64_t h = mix64(base);
  for (std::uint64_t s : salts) {
    h = mix64(h ^ mix64(s));
  }
  return h;
}

// Minimal SplitMix64 stream generator. <random> distributions are
// implementation-defined, so anything that must reproduce across toolchains
// draws through this class instead.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;  // 2^64 mod bound
    if (rem == 0) return next() % bound;
    const std::uint64_t cutoff = UINT64_MAX - rem;
    for (;;) {
      const std::uint64_t r = next();
      if (r <= cutoff) return r % bound;
    }
  }

  // Uniform double in [0, 1).
  double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // k distinct values chosen uniformly from `pool`, partial Fisher-Yates.
  template <typename T>
  std::vector<T> sample(const std::vector<T>& pool, std::size_t k) {
    std::vector<T> scratch(pool);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(scratch.size() - i));
      std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(k);
    return scratch;
  }

 private:
  std::uint64_t state_;
};

}  // namespace effortbk
