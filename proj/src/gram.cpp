#include "nodal/gram.hpp"

#include <cstdlib>

namespace nodal::rootlat {

RootSystemType classify_gram(const GramMatrix& g) {
  const int n = g.size();
  const long long diag = g.negative ? -2 : 2;
  const long long bond = g.negative ? 1 : -1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g.a[i].size()) != n) throw NotSimplyLaced("Gram matrix is not square");
    if (g.a[i][i] != diag) throw NotSimplyLaced("diagonal entry is not " + std::to_string(diag));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.a[i][j] != g.a[j][i]) throw NotSimplyLaced("Gram matrix is not symmetric");
      if (std::llabs(g.a[i][j]) > 1) throw NotSimplyLaced("off-diagonal entry exceeds 1 in magnitude");
    }
  }
  DynkinDiagram d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.a[i][j] == bond) d.add_edge(i, j);
      else if (g.a[i][j] != 0)
        throw NotADE("off-diagonal entry of the wrong sign: not a simple-root basis");
    }
  return d.classify_finite();
}

long long gram_det(const GramMatrix& g) {
  const int n = g.size();
  if (n == 0) return 1;
  std::vector<std::vector<long long>> m = g.a;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace nodal::rootlat
