#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace discord::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

// Counter-keyed deterministic stream: the state depends only on the key
// tuple, never on call order elsewhere, so draws are reproducible under
// any evaluation schedule.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2, std::uint64_t k3) {
    state_ = splitmix64(seed);
    state_ = splitmix64(state_ ^ k1);
    state_ = splitmix64(state_ ^ k2);
    state_ = splitmix64(state_ ^ k3);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Box-Muller pair of independent standard normals.
  std::pair<double, double> gaussian_pair() {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace discord::detail
