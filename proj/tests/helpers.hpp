#pragma once

#include <complex>
#include <random>

// deterministic complex samplers shared by the dynamics tests
namespace testutil {

using C = std::complex<double>;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  double real(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen);
  }

  // complex sample with modulus in [lo, hi], arbitrary phase
  C annulus(double lo = 0.4, double hi = 1.6) {
    double r = real(lo, hi);
    double phi = real(0.0, 6.283185307179586);
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  // time sample staying clear of the punctures 0 and 1
  C time_clear() { return C(real(1.4, 2.4), real(0.3, 1.1)); }
};

}  // namespace testutil
