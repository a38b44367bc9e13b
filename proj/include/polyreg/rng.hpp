// Counter-based deterministic random numbers.
//
// Every draw is a pure function of (seed, index, stream), so parallel or
// out-of-order sampling reproduces the sequential results bit for bit.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace polyreg {

namespace detail {
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}
}  // namespace detail

struct CounterRng {
  std::uint64_t seed;

  std::uint64_t bits(std::uint64_t index, std::uint64_t stream = 0) const {
    std::uint64_t h = detail::mix64(seed ^ 0xD1B54A32D192ED03ULL);
    h = detail::mix64(h ^ index);
    h = detail::mix64(h ^ (stream * 0x8CB92BA72F3D8DD7ULL + 1));
    return h;
  }

  // Uniform in [0,1).
  double uniform(std::uint64_t index, std::uint64_t stream = 0) const {
    return static_cast<double>(bits(index, stream) >> 11) * 0x1.0p-53;
  }

  // Uniform in (0,1]; safe as a log argument.
  double uniform_pos(std::uint64_t index, std::uint64_t stream = 0) const {
    return (static_cast<double>(bits(index, stream) >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; streams 2k, 2k+1 feed draw k.
  double normal(std::uint64_t index, std::uint64_t stream) const {
    double u1 = uniform_pos(index, 2 * stream);
    double u2 = uniform(index, 2 * stream + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::complex<double> complex_normal(std::uint64_t index,
                                      std::uint64_t stream) const {
    double u1 = uniform_pos(index, 2 * stream);
    double u2 = uniform(index, 2 * stream + 1);
    double r = std::sqrt(-std::log(u1));
    double a = 2.0 * 3.14159265358979323846 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }
};

}  // namespace polyreg
