#ifndef LGRAPH_MILL_HPP
#define LGRAPH_MILL_HPP

#include <string>
#include <vector>

#include "lgraph/formula.hpp"
#include "lgraph/graph.hpp"

namespace lgraph {

/// Structural translation: A -o B is implication of the parts, A * B their
/// sum, 1 the empty graph and an atom a singleton. Always acyclic; not always
/// well-formed.
RawGraph to_graph(const Formula &f);

struct DecompositionPart;

/// Recursive conclusion-clique structure of a logical graph. No parts means
/// the empty graph.
struct Decomposition {
  std::vector<DecompositionPart> parts;
};

struct DecompositionPart {
  VSet clique;                // conclusions sharing one predecessor set
  Decomposition assumptions;  // the graph above those predecessors
};

/// Parts at every level are in canonical order (by rendered sub-formula).
Decomposition decompose(const LogicalGraph &g);

/// Reads the decomposition back as a formula: each part becomes
/// `assumptions -o clique`, or just the clique when it has no assumptions; a
/// clique is the right-nested tensor of its labels in sorted order; parts are
/// joined by right-nested tensor in canonical order; the empty graph is 1.
Formula to_formula(const LogicalGraph &g);

/// to_formula(validate(to_graph(f))). Throws NotInFragment when the graph of
/// f is not well-formed.
Formula normalize(const Formula &f);

/// Text of the canonical formula; equal exactly on alpha-equivalent graphs.
std::string canonical_key(const LogicalGraph &g);

} // namespace lgraph

#endif
