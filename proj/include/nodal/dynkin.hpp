#pragma once

#include <utility>
#include <vector>

#include "nodal/roots.hpp"

namespace nodal::rootlat {

// Simply-laced diagram on nodes 0..n-1: no loops, at most one edge per pair.
struct DynkinDiagram {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit DynkinDiagram(int nodes = 0) : n(nodes), adj(nodes) {}

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;

  struct Component {
    std::vector<int> nodes;
    SimpleType type;   // base type (the finite type; for affine the extended base)
    bool affine;       // true when the component is an affine extension
    Component(std::vector<int> ns, SimpleType t, bool af)
        : nodes(std::move(ns)), type(t), affine(af) {}
  };

  // Per-component recognition of finite-ADE and affine-ADE shapes.
  // Throws NotADE when some component is neither.  The affine A1 diagram
  // (a double bond) has no simply-laced presentation and never appears.
  std::vector<Component> classify() const;

  // All components must be finite ADE; returns their direct-sum type.
  RootSystemType classify_finite() const;

  // Diagram with node `v` removed (remaining nodes renumbered in order).
  DynkinDiagram without_node(int v) const;
};

// Standard finite diagram of a simple type.
DynkinDiagram diagram_of(const SimpleType& t);

// Affine extension: the finite diagram plus the extending node (index rank).
// Not defined for A1 (double bond); callers handle that case separately.
DynkinDiagram affine_diagram_of(const SimpleType& t);

}  // namespace nodal::rootlat
