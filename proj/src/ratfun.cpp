#include "nodal/ratfun.hpp"

#include <sstream>

namespace nodal {

void Poly::trim() {
  while (!c.empty() && c.back() == C(0.0)) c.pop_back();
}

bool Poly::is_zero(double tol) const {
  for (const C& v : c)
    if (std::abs(v) > tol) return false;
  return true;
}

C Poly::eval(C t) const {
  C acc(0.0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

Poly Poly::deriv() const {
  Poly d;
  for (size_t k = 1; k < c.size(); ++k) d.c.push_back(static_cast<double>(k) * c[k]);
  d.trim();
  return d;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), C(0.0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + C(-1.0) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, C(0.0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly operator*(C s, const Poly& a) {
  Poly r = a;
  for (C& v : r.c) v *= s;
  r.trim();
  return r;
}

static std::string coeff_str(C v) {
  std::ostringstream os;
  if (v.imag() == 0.0) {
    os << v.real();
  } else {
    os << '(' << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i)";
  }
  return os.str();
}

std::string Poly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k] == C(0.0)) continue;
    C coeff = c[k];
    if (first) {
      first = false;
    } else if (coeff.imag() == 0.0 && coeff.real() < 0.0) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    if (k >= 1 && coeff == C(-1.0)) {
      os << '-' << var;
      if (k >= 2) os << '^' << k;
      continue;
    }
    if (k == 0 || coeff != C(1.0)) os << coeff_str(coeff);
    if (k >= 1) {
      if (coeff != C(1.0)) os << '*';
      os << var;
      if (k >= 2) os << '^' << k;
    }
  }
  if (first) return "0";
  return os.str();
}

RatFun RatFun::deriv() const {
  // (n/d)' = (n'd - nd') / d^2
  return {num.deriv() * den - num * den.deriv(), den * den};
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + RatFun(C(-1.0) * b.num, b.den); }

RatFun operator*(const RatFun& a, const RatFun& b) { return {a.num * b.num, a.den * b.den}; }

RatFun operator/(const RatFun& a, const RatFun& b) { return {a.num * b.den, a.den * b.num}; }

std::string RatFun::str(const std::string& var) const {
  if (den.degree() == 0 && den.c[0] == C(1.0)) return num.str(var);
  return "(" + num.str(var) + ") / (" + den.str(var) + ")";
}

}  // namespace nodal
