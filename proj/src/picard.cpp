#include "nodal/picard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace nodal::rootlat {

long long form_dot(const Class10& u, const Class10& v) {
  long long s = u[0] * v[0];
  for (int i = 1; i < 10; ++i) s -= u[i] * v[i];
  return s;
}

namespace {

// Z-basis of the kernel of the integer matrix rows x cols `m` (unimodular
// column reduction; kernel columns are those annihilated by every row).
std::vector<std::vector<long long>> integer_kernel(std::vector<std::vector<long long>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::vector<long long>> u(cols, std::vector<long long>(cols, 0));
  for (int i = 0; i < cols; ++i) u[i][i] = 1;
  auto col_addmul = [&](int dst, int src, long long f) {
    for (int r = 0; r < rows; ++r) m[r][dst] += f * m[r][src];
    for (int r = 0; r < cols; ++r) u[r][dst] += f * u[r][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    for (int r = 0; r < cols; ++r) std::swap(u[r][a], u[r][b]);
  };
  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    for (;;) {
      int piv = -1;
      for (int c = lead; c < cols; ++c)
        if (m[r][c] != 0 && (piv < 0 || std::llabs(m[r][c]) < std::llabs(m[r][piv]))) piv = c;
      if (piv < 0) break;
      col_swap(lead, piv);
      bool clean = true;
      for (int c = lead + 1; c < cols; ++c) {
        long long q = m[r][c] / m[r][lead];
        if (q != 0) col_addmul(c, lead, -q);
        if (m[r][c] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  std::vector<std::vector<long long>> kernel;
  for (int c = 0; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (m[r][c] != 0) zero = false;
    if (!zero) continue;
    std::vector<long long> v(cols);
    for (int r = 0; r < cols; ++r) v[r] = u[r][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// All x in Z^n with x^T G x == 2 for positive-definite integer G
// (Fincke-Pohst with a floating Cholesky bound and exact membership check).
std::vector<std::vector<long long>> norm2_vectors(const std::vector<std::vector<long long>>& g) {
  const int n = static_cast<int>(g.size());
  // floating Cholesky G = L D L^T
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  std::vector<double> d(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = static_cast<double>(g[i][j]);
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k] * d[k];
      if (i == j) {
        if (s <= 0) return {};  // not positive definite
        d[i] = s;
        l[i][i] = 1.0;
      } else {
        l[i][j] = s / d[j];
      }
    }
  }
  std::vector<std::vector<long long>> out;
  std::vector<long long> x(n, 0);
  const double radius = 2.0 + 1e-6;
  // enumerate coordinates from the last: Q(x) = sum_i d_i (x_i + sum_{j>i} l_ji x_j)^2
  auto rec = [&](auto&& self, int i, double used) -> void {
    if (i < 0) {
      long long q = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) q += g[a][b] * x[a] * x[b];
      if (q == 2) out.push_back(x);
      return;
    }
    double center = 0;
    for (int j = i + 1; j < n; ++j) center += l[j][i] * static_cast<double>(x[j]);
    double room = (radius - used) / d[i];
    if (room < 0) return;
    double half = std::sqrt(room);
    long long lo = static_cast<long long>(std::ceil(-center - half - 1e-9));
    long long hi = static_cast<long long>(std::floor(-center + half + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      x[i] = v;
      double term = d[i] * (v + center) * (v + center);
      self(self, i - 1, used + term);
    }
    x[i] = 0;
  };
  rec(rec, n - 1, 0.0);
  return out;
}

bool lex_positive(const std::vector<long long>& v) {
  for (long long c : v) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

}  // namespace

OpCheckReport op_pair_lattice_check(const PicardConfig& cfg) {
  const size_t r = cfg.components.size();
  if (cfg.multiplicities.size() != r)
    throw MalformedConfig("multiplicity count does not match component count");
  Class10 sum{};
  for (size_t i = 0; i < r; ++i)
    for (int k = 0; k < 10; ++k) sum[k] += cfg.multiplicities[i] * cfg.components[i][k];
  if (sum != cfg.anticanonical)
    throw MalformedConfig("anticanonical class differs from sum of weighted components");

  OpCheckReport rep;
  rep.y_squared = form_dot(cfg.anticanonical, cfg.anticanonical);
  rep.is_op_pair = rep.y_squared == 0;
  for (size_t i = 0; i < r; ++i) {
    long long v = form_dot(cfg.anticanonical, cfg.components[i]);
    rep.y_dot_yi.push_back(v);
    if (v != 0) rep.is_op_pair = false;
  }

  if (!cfg.section) return rep;
  rep.y_dot_o = form_dot(cfg.anticanonical, *cfg.section);
  if (rep.y_dot_o != 1) return rep;  // complement is unimodular only when Y.O = 1
  rep.has_complement_report = true;

  // kernel of v -> (Y.v, O.v)
  std::vector<std::vector<long long>> m(2, std::vector<long long>(10));
  for (int k = 0; k < 10; ++k) {
    long long sign = k == 0 ? 1 : -1;
    m[0][k] = sign * cfg.anticanonical[k];
    m[1][k] = sign * (*cfg.section)[k];
  }
  auto kernel = integer_kernel(std::move(m));
  const int n = static_cast<int>(kernel.size());

  rep.complement_gram.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Class10 a{}, b{};
      for (int k = 0; k < 10; ++k) {
        a[k] = kernel[i][k];
        b[k] = kernel[j][k];
      }
      rep.complement_gram[i][j] = form_dot(a, b);
    }
  GramMatrix gm{rep.complement_gram, true};
  rep.complement_det = gram_det(gm);
  rep.complement_even = true;
  for (int i = 0; i < n; ++i)
    if (rep.complement_gram[i][i] % 2 != 0) rep.complement_even = false;

  // classify: enumerate the roots of the (positified) complement lattice and
  // read the type off a simple system
  std::vector<std::vector<long long>> pos(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pos[i][j] = -rep.complement_gram[i][j];
  auto roots = norm2_vectors(pos);
  rep.complement_root_count = static_cast<int>(roots.size());
  std::set<std::vector<long long>> positive;
  for (const auto& v : roots)
    if (lex_positive(v)) positive.insert(v);
  std::vector<std::vector<long long>> simple;
  for (const auto& p : positive) {
    bool decomposable = false;
    for (const auto& q : positive) {
      if (q == p) continue;
      std::vector<long long> diff(n);
      for (int k = 0; k < n; ++k) diff[k] = p[k] - q[k];
      if (positive.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(p);
  }
  const int s = static_cast<int>(simple.size());
  GramMatrix sg;
  sg.a.assign(s, std::vector<long long>(s, 0));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      long long acc = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) acc += pos[a][b] * simple[i][a] * simple[j][b];
      sg.a[i][j] = acc;
    }
  try {
    rep.complement_type = classify_gram(sg).str();
  } catch (const Error& e) {
    rep.complement_type = std::string("unclassified: ") + e.what();
  }
  return rep;
}

}  // namespace nodal::rootlat
