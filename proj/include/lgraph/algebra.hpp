#ifndef LGRAPH_ALGEBRA_HPP
#define LGRAPH_ALGEBRA_HPP

#include "lgraph/graph.hpp"

namespace lgraph {

/// Result of combining two graphs: the graph plus where each operand's
/// vertices ended up. The images of inj1 and inj2 partition the result.
struct SumResult {
  RawGraph graph;
  VMap inj1;
  VMap inj2;
};

/// The additive unit.
LogicalGraph empty_graph();

/// One vertex, named "v0", labelled l.
LogicalGraph singleton(const LabelId &l);

/// Same vertex names with the same labels; edges are ignored.
bool vertex_equivalent(const RawGraph &g, const RawGraph &h);

/// Disjoint union. h is renamed apart from k; k keeps its names.
SumResult add(const RawGraph &h, const RawGraph &k);

/// Removes k's vertices from h by name. Throws NotASubgraphByName when k has
/// a vertex h lacks or labels differently.
RawGraph subtract(const RawGraph &h, const RawGraph &k);

/// add(h, k) plus an edge from every conclusion of h to every conclusion of k.
/// The result is not necessarily well-formed.
SumResult implies(const RawGraph &h, const RawGraph &k);

} // namespace lgraph

#endif
