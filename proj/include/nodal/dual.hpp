#pragma once

#include <complex>

namespace nodal {

using C = std::complex<double>;

// First-order dual number over the complex scalars: value + derivative along
// one seeded direction.  Seeding (t,x,y) with (1, vx, vy) turns one evaluation
// of a map into its derivative along the flow, J*v + dT/dt.
struct Dual {
  C v{};  // value
  C d{};  // directional derivative

  Dual() = default;
  Dual(C value) : v(value) {}
  Dual(C value, C deriv) : v(value), d(deriv) {}
  Dual(double value) : v(value) {}

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    C inv = C(1.0) / b.v;
    return {a.v * inv, (a.d - a.v * inv * b.d) * inv};
  }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }
};

// the scalar "value part", so templated code can map back to plain complex
inline C value_of(const C& z) { return z; }
inline C value_of(const Dual& z) { return z.v; }

}  // namespace nodal
