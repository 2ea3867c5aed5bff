#ifndef LGRAPH_ISO_HPP
#define LGRAPH_ISO_HPP

#include <optional>
#include <vector>

#include "lgraph/graph.hpp"

namespace lgraph {

/// All extensions of m that turn it into a bijection from asms1 onto asms2:
/// unmapped members of asms1 go label-preservingly to unused members of
/// asms2, in lexicographic order of the assignment. Empty when the sets differ
/// in size or an already-mapped member of asms1 lands outside asms2.
std::vector<VMap> vertex_match_perms(const RawGraph &g1, const VSet &asms1,
                                     const RawGraph &g2, const VSet &asms2,
                                     const VMap &m);

/// Every isomorphism from the up-closure of v1 in g1 onto the up-closure of v2
/// in g2 that sends v1 to v2, built by a depth-first traversal of g1 from v1.
std::vector<VMap> mk_graph_iso(const RawGraph &g1, const VertexId &v1,
                               const RawGraph &g2, const VertexId &v2);

/// Same, starting from an existing partial map. Vertices already in the
/// domain of `seed` are treated as explored.
std::vector<VMap> mk_graph_iso(const RawGraph &g1, const VertexId &v1,
                               const RawGraph &g2, const VertexId &v2,
                               const VMap &seed);

/// True iff m is a bijection V(g1) -> V(g2) preserving labels and edges in
/// both directions.
bool is_isomorphism(const RawGraph &g1, const RawGraph &g2, const VMap &m);

/// A vertex alpha-equivalence from g1 onto g2, if one exists.
std::optional<VMap> alpha_equiv(const RawGraph &g1, const RawGraph &g2);

/// Every vertex alpha-equivalence from g1 onto g2, ascending.
std::vector<VMap> all_isomorphisms(const RawGraph &g1, const RawGraph &g2);

} // namespace lgraph

#endif
