#include "nodal/e8.hpp"

#include <algorithm>

#include "nodal/dynkin.hpp"

namespace nodal::rootlat {

long long dot_doubled(const RootVec& a, const RootVec& b) {
  long long s = 0;
  for (int i = 0; i < 8; ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

const std::vector<RootVec>& e8_roots() {
  static const std::vector<RootVec> roots = [] {
    std::vector<RootVec> out;
    out.reserve(240);
    // +-e_i +- e_j (doubled: entries +-2), i < j
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int si = -1; si <= 1; si += 2)
          for (int sj = -1; sj <= 1; sj += 2) {
            RootVec v{};
            v[i] = 2 * si;
            v[j] = 2 * sj;
            out.push_back(v);
          }
    // half-integer vectors (doubled: all entries +-1) with an even number of
    // minus signs
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      RootVec v;
      for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return roots;
}

GramMatrix RootEmbedding::gram() const {
  const int n = static_cast<int>(vectors.size());
  GramMatrix g;
  g.a.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.a[i][j] = inner(vectors[i], vectors[j]);
  return g;
}

namespace {

struct SearchPlan {
  // Target diagram nodes listed component by component; within a component
  // nodes are BFS-ordered so each node after the first touches an earlier one.
  std::vector<std::vector<char>> want;  // want[i][j]: 1 if bonded, 0 if orthogonal (j < i)
  std::vector<int> comp_of;             // component index per node
  std::vector<int> comp_first;          // position of each component's first node
  std::vector<int> same_as_prev;        // for node i starting component c: the first
                                        // node of an identical preceding component, else -1
  std::vector<int> order_after;         // order_after[i] >= 0: require pick[i] > pick[that]
};

// diagram-automorphism orbits used for symmetry breaking: node pairs whose
// root images may be ordered canonically (A_n reversal, D_n leaf swap, the
// full leg symmetry of D4, the E6 reflection)
std::vector<std::pair<int, int>> swap_pairs(const SimpleType& s) {
  const int n = s.rank;
  switch (s.family) {
    case Family::A: return n >= 2 ? std::vector<std::pair<int, int>>{{0, n - 1}} : std::vector<std::pair<int, int>>{};
    case Family::D:
      if (n == 4) return {{0, 2}, {2, 3}};
      return {{n - 2, n - 1}};
    case Family::E:
      if (n == 6) return {{0, 4}};
      return {};
  }
  return {};
}

SearchPlan make_plan(const RootSystemType& t) {
  SearchPlan plan;
  int base = 0;
  std::vector<SimpleType> comps = t.components;
  for (size_t c = 0; c < comps.size(); ++c) {
    DynkinDiagram d = diagram_of(comps[c]);
    // BFS order from node 0
    std::vector<int> order;
    std::vector<char> seen(d.n, 0);
    order.push_back(0);
    seen[0] = 1;
    for (size_t q = 0; q < order.size(); ++q)
      for (int w : d.adj[order[q]])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    std::vector<int> pos(d.n);
    for (int i = 0; i < d.n; ++i) pos[order[i]] = i;
    for (int i = 0; i < d.n; ++i) {
      std::vector<char> row(base + i, 0);
      for (int j = 0; j < i; ++j) row[base + j] = d.has_edge(order[i], order[j]) ? 1 : 0;
      plan.want.push_back(std::move(row));
      plan.comp_of.push_back(static_cast<int>(c));
      plan.order_after.push_back(-1);
    }
    plan.comp_first.push_back(base);
    // symmetry breaking between identical components: force increasing first
    // root indices (components of equal type are interchangeable)
    int prev_same = -1;
    if (c > 0 && comps[c] == comps[c - 1]) prev_same = plan.comp_first[c - 1];
    plan.same_as_prev.push_back(prev_same);
    // symmetry breaking within a component: orient along its diagram
    // automorphisms (BFS from node 0 places the earlier node of each pair
    // first, so the constraint is a lower bound on the later one)
    for (auto [a, b] : swap_pairs(comps[c])) {
      int pa = base + pos[a], pb = base + pos[b];
      if (pa > pb) std::swap(pa, pb);
      plan.order_after[pb] = pa;
    }
    base += d.n;
  }
  return plan;
}

bool backtrack(const SearchPlan& plan, const std::vector<RootVec>& roots, size_t node,
               std::vector<int>& pick) {
  const size_t k = plan.want.size();
  if (node == k) return true;
  const int comp = plan.comp_of[node];
  const bool first_of_comp = plan.comp_first[comp] == static_cast<int>(node);
  int start = 0;
  if (first_of_comp && plan.same_as_prev[comp] >= 0)
    start = pick[plan.same_as_prev[comp]] + 1;
  if (plan.order_after[node] >= 0) start = std::max(start, pick[plan.order_after[node]] + 1);
  // The Weyl group acts transitively on roots, so the very first simple root
  // can be pinned to roots[0] without losing any embeddable type.
  const int stop = node == 0 ? 1 : static_cast<int>(roots.size());
  for (int r = start; r < stop; ++r) {
    bool ok = true;
    for (size_t j = 0; j < node && ok; ++j) {
      long long ip = inner(roots[r], roots[pick[j]]);
      long long want = plan.want[node][j] ? -1 : 0;
      if (ip != want) ok = false;
    }
    if (!ok) continue;
    pick[node] = r;
    if (backtrack(plan, roots, node + 1, pick)) return true;
  }
  return false;
}

}  // namespace

RootEmbedding find_embedding(const RootSystemType& t) {
  if (t.rank() > 8) throw NotEmbeddable("rank " + std::to_string(t.rank()) + " exceeds 8");
  if (t.empty()) return RootEmbedding{t, {}};
  SearchPlan plan = make_plan(t);
  const auto& roots = e8_roots();
  std::vector<int> pick(plan.want.size(), -1);
  if (!backtrack(plan, roots, 0, pick)) throw NotEmbeddable("no root arrangement realizes " + t.str());
  RootEmbedding emb;
  emb.type = t;
  for (int r : pick) emb.vectors.push_back(roots[r]);
  return emb;
}

}  // namespace nodal::rootlat
