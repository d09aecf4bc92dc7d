#include "nodal/dynkin.hpp"

#include <algorithm>

namespace nodal::rootlat {

void DynkinDiagram::add_edge(int a, int b) {
  if (a == b) throw NotADE("diagram self-loop");
  if (a < 0 || b < 0 || a >= n || b >= n) throw NotADE("edge endpoint out of range");
  if (has_edge(a, b)) return;
  adj[a].push_back(b);
  adj[b].push_back(a);
}

bool DynkinDiagram::has_edge(int a, int b) const {
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

DynkinDiagram DynkinDiagram::without_node(int v) const {
  DynkinDiagram d(n - 1);
  std::vector<int> map(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (i != v) map[i] = k++;
  for (int a = 0; a < n; ++a)
    for (int b : adj[a])
      if (a < b && a != v && b != v) d.add_edge(map[a], map[b]);
  return d;
}

namespace {

// Walk a leg away from `center` starting at `first`; returns the node count.
int leg_length(const DynkinDiagram& d, int center, int first) {
  int prev = center, cur = first, len = 0;
  for (;;) {
    ++len;
    if (d.adj[cur].size() == 1) return len;  // leaf
    if (d.adj[cur].size() > 2) return -1;    // hits another branch point
    int next = d.adj[cur][0] == prev ? d.adj[cur][1] : d.adj[cur][0];
    prev = cur;
    cur = next;
  }
}

DynkinDiagram::Component classify_component(const DynkinDiagram& d, const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  int edges = 0;
  int max_deg = 0;
  std::vector<int> deg3, deg4;
  for (int v : nodes) {
    int dv = static_cast<int>(d.adj[v].size());
    edges += dv;
    max_deg = std::max(max_deg, dv);
    if (dv == 3) deg3.push_back(v);
    if (dv >= 4) deg4.push_back(v);
  }
  edges /= 2;

  auto fail = [&]() -> DynkinDiagram::Component {
    throw NotADE("component is not an ADE or affine-ADE diagram");
  };

  if (edges == m) {
    // cycle = affine A_{m-1}
    if (max_deg != 2 || m < 3) return fail();
    return {nodes, SimpleType(Family::A, m - 1), true};
  }
  if (edges != m - 1) return fail();  // not a tree

  if (max_deg <= 2) return {nodes, SimpleType(Family::A, m), false};  // path

  if (!deg4.empty()) {
    // only affine D4 (a 4-star) carries a degree-4 node
    if (deg4.size() == 1 && deg3.empty() && m == 5 && d.adj[deg4[0]].size() == 4)
      return {nodes, SimpleType(Family::D, 4), true};
    return fail();
  }

  if (deg3.size() == 1) {
    int c = deg3[0];
    int l[3];
    for (int i = 0; i < 3; ++i) {
      l[i] = leg_length(d, c, d.adj[c][i]);
      if (l[i] < 0) return fail();
    }
    std::sort(l, l + 3, std::greater<int>());
    if (l[1] == 1 && l[2] == 1) return {nodes, SimpleType(Family::D, m), false};
    if (l[0] == 2 && l[1] == 2 && l[2] == 1) return {nodes, SimpleType(Family::E, 6), false};
    if (l[0] == 3 && l[1] == 2 && l[2] == 1) return {nodes, SimpleType(Family::E, 7), false};
    if (l[0] == 4 && l[1] == 2 && l[2] == 1) return {nodes, SimpleType(Family::E, 8), false};
    if (l[0] == 2 && l[1] == 2 && l[2] == 2) return {nodes, SimpleType(Family::E, 6), true};
    if (l[0] == 3 && l[1] == 3 && l[2] == 1) return {nodes, SimpleType(Family::E, 7), true};
    if (l[0] == 5 && l[1] == 2 && l[2] == 1) return {nodes, SimpleType(Family::E, 8), true};
    return fail();
  }

  if (deg3.size() == 2) {
    // affine D_{m-1}: two forks, each with two length-1 legs
    for (int f : deg3) {
      int leaves = 0;
      for (int nb : d.adj[f])
        if (d.adj[nb].size() == 1) ++leaves;
      if (leaves != 2) return fail();
    }
    if (m - 1 < 5) return fail();
    return {nodes, SimpleType(Family::D, m - 1), true};
  }

  return fail();
}

}  // namespace

std::vector<DynkinDiagram::Component> DynkinDiagram::classify() const {
  std::vector<Component> out;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_component(*this, comp));
  }
  return out;
}

RootSystemType DynkinDiagram::classify_finite() const {
  RootSystemType t;
  for (const auto& c : classify()) {
    if (c.affine) throw NotADE("affine component where a finite ADE diagram was required");
    t.add(c.type);
  }
  return t;
}

DynkinDiagram diagram_of(const SimpleType& t) {
  int n = t.rank;
  DynkinDiagram d(n);
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) d.add_edge(i, i + 1);
      break;
    case Family::D:
      // chain 0..n-3, leaves n-2 and n-1 on node n-3
      for (int i = 0; i + 1 <= n - 3; ++i) d.add_edge(i, i + 1);
      d.add_edge(n - 3, n - 2);
      d.add_edge(n - 3, n - 1);
      break;
    case Family::E:
      // chain 0..n-2, extra node n-1 on node 2
      for (int i = 0; i + 1 <= n - 2; ++i) d.add_edge(i, i + 1);
      d.add_edge(2, n - 1);
      break;
  }
  return d;
}

DynkinDiagram affine_diagram_of(const SimpleType& t) {
  int n = t.rank;
  if (t.family == Family::A) {
    if (n == 1) throw NotADE("affine A1 has no simply-laced diagram");
    DynkinDiagram d(n + 1);
    for (int i = 0; i < n; ++i) d.add_edge(i, i + 1);
    d.add_edge(n, 0);
    return d;
  }
  DynkinDiagram d = diagram_of(t);
  d.n += 1;
  d.adj.emplace_back();
  if (t.family == Family::D) {
    d.add_edge(n, 1);  // second fork at the far end of the chain
  } else if (n == 6) {
    d.add_edge(n, 5);  // tip of the short leg
  } else if (n == 7) {
    d.add_edge(n, 0);  // tip of the length-2 leg
  } else {
    d.add_edge(n, 6);  // tip of the long leg
  }
  return d;
}

}  // namespace nodal::rootlat
