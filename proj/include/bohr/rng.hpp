#pragma once

#include <cstdint>

namespace bohr::detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Small deterministic generator. Distributions are built by hand so that
// sequences are bit-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform in {0, ..., n-1}; n small, modulo bias negligible
  int uniform_int(int n) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
  }

 private:
  std::uint64_t state_;
};

// decorrelated stream seed for trial index i under a campaign seed
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (i + 1));
  return splitmix64_next(s);
}

}  // namespace bohr::detail
