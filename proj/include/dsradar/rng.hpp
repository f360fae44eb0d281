#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace dsradar {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Trial seeds are a pure function of (master seed, point, trial, stream), so
// parallel and serial experiment runs draw identical values.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(master ^ splitmix64(a + 1));
  s = splitmix64(s ^ splitmix64(b + 2));
  return splitmix64(s ^ splitmix64(c + 3));
}

// mt19937_64 plus hand-rolled variate transforms. The standard distributions
// are implementation-defined, which would break the bit-identical replay
// contract across toolchains; these transforms are fully specified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  std::uint64_t bits() { return gen_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi], rejection sampled
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  // e^{j U[0,2pi)}
  std::complex<double> unit_phasor() {
    const double phi = uniform() * 2.0 * pi_;
    return {std::cos(phi), std::sin(phi)};
  }

  // circularly symmetric complex Gaussian with E|w|^2 = 1
  std::complex<double> gaussian() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double r = std::sqrt(-std::log(u));
    return r * unit_phasor();
  }

 private:
  static constexpr double pi_ = 3.14159265358979323846;
  std::mt19937_64 gen_;
};

}  // namespace dsradar
