#pragma once

#include <string>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/ratfun.hpp"

namespace nodal::riccati {

// x' = a(t) x^2 + b(t) x + c(t), coefficients exact rational functions of t.
struct RiccatiODE {
  RatFun a, b, c;
  std::vector<C> pole_set;  // where some coefficient blows up

  bool quadratic(double tol = 0.0) const { return !a.is_zero(tol); }
};

// u'' + p(t) u' + q(t) u = 0 obtained from a Riccati equation by
// x = -u'/(a u);  p = -(a'/a + b), q = a c.
struct Linear2ODE {
  RatFun p, q;
  std::vector<C> pole_set;
};

// Exact linearization; throws DegenerateQuadratic when a is identically zero.
Linear2ODE linearize(const RiccatiODE& ode);

}  // namespace nodal::riccati
