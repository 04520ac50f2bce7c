#pragma once

// Seeded random streams with labeled substream derivation.
//
// Every random quantity in the library is drawn from a generator that is a
// pure function of (master seed, substream label, row index). Rows can
// therefore be generated in any order or in parallel without changing a
// single draw, and adding a new consumer with its own label never perturbs
// existing streams. Distribution samplers are implemented here rather than
// taken from <random> because the standard leaves gamma/normal algorithms
// unspecified, which would tie output bytes to a particular libstdc++.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

namespace pie::rng {

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// FNV-1a over the label bytes.
inline constexpr std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Stable seed for a named purpose, e.g. derive_seed(seed, "control/select").
inline constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                           std::string_view label) {
  std::uint64_t state = seed ^ hash_label(label);
  return splitmix64(state);
}

// xoshiro256++ (Blackman/Vigna), seeded through splitmix64.
class Engine {
public:
  explicit Engine(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1): midpoints of the 2^53 grid.
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the Marsaglia polar method.
  double normal() {
    for (;;) {
      const double a = 2.0 * uniform01() - 1.0;
      const double b = 2.0 * uniform01() - 1.0;
      const double s = a * a + b * b;
      if (s > 0.0 && s < 1.0) return a * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

  // Gamma(shape, rate) by Marsaglia-Tsang squeeze; shape < 1 handled by the
  // boost Gamma(shape+1) * U^(1/shape). Result clamped away from zero so
  // hazard draws stay strictly positive even for near-flat priors.
  double gamma(double shape, double rate) {
    double boost = 1.0;
    if (shape < 1.0) {
      boost = std::pow(uniform01(), 1.0 / shape);
      shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2 ||
          std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
        const double value = d * v * boost / rate;
        return value > std::numeric_limits<double>::min()
                   ? value
                   : std::numeric_limits<double>::min();
      }
    }
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Generator for one row of a Monte Carlo matrix. Pure function of
// (stream seed, row), independent of how rows are scheduled.
inline Engine row_engine(std::uint64_t stream_seed, std::uint64_t row) {
  std::uint64_t state = stream_seed;
  (void)splitmix64(state);
  state ^= row * 0xd1342543de82ef95ULL;
  return Engine(state);
}

}  // namespace pie::rng
