#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nodal/dual.hpp"

namespace nodal {

// Polynomial in t with complex coefficients, c[k] * t^k.
struct Poly {
  std::vector<C> c;

  Poly() = default;
  Poly(std::initializer_list<C> coeffs) : c(coeffs) { trim(); }
  static Poly constant(C v) { return Poly{{v}}; }
  static Poly t() { return Poly{{C(0.0), C(1.0)}}; }

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero(double tol = 0.0) const;
  C eval(C t) const;
  Poly deriv() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(C s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  std::string str(const std::string& var = "t") const;
};

// Quotient of polynomials in t.  No symbolic cancellation is attempted; the
// catalog denominators are 1, t and t(t-1), whose zeros coincide with the
// time-domain punctures.
struct RatFun {
  Poly num;
  Poly den = Poly::constant(C(1.0));

  RatFun() = default;
  RatFun(Poly n) : num(std::move(n)) {}
  RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}
  static RatFun constant(C v) { return RatFun(Poly::constant(v)); }

  bool is_zero(double tol = 0.0) const { return num.is_zero(tol); }
  C eval(C t) const { return num.eval(t) / den.eval(t); }
  RatFun deriv() const;  // exact quotient rule

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  std::string str(const std::string& var = "t") const;
};

}  // namespace nodal
