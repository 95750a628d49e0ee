#pragma once

#include <cstdint>
#include <random>

namespace unipart {

// Deterministic RNG. Normal deviates use an explicit Box-Muller transform so
// that streams do not depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586477 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % n);
  }

  // Independent substream derived from this seed and a stream id.
  static Rng stream(std::uint64_t seed, std::uint64_t id) {
    return Rng(seed * 0x9e3779b97f4a7c15ull + id * 0xbf58476d1ce4e5b9ull + 1);
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace unipart
