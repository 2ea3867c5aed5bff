#ifndef LGRAPH_ORACLE_HPP
#define LGRAPH_ORACLE_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "lgraph/formula.hpp"
#include "lgraph/graph.hpp"

// Brute-force references. Nothing in here calls the traversal, isomorphism or
// translation code it is used to check.
namespace lgraph::oracle {

inline constexpr std::size_t max_enumeration_connectives = 6;
inline constexpr std::size_t max_enumeration_atoms = 3;
inline constexpr std::size_t max_rewrite_depth = 4;
inline constexpr std::size_t max_naive_vertices = 8;

/// Every label- and edge-preserving bijection V(g1) -> V(g2), found by trying
/// all permutations. Throws BoundsTooLarge above max_naive_vertices.
std::vector<VMap> naive_iso(const RawGraph &g1, const RawGraph &g2);

/// Every formula over 1 and `atoms` with at most `max_connectives` binary
/// nodes, each once, ordered by size then by construction. Throws
/// BoundsTooLarge above the documented limits.
std::vector<Formula> enumerate_formulas(const std::vector<LabelId> &atoms,
                                        std::size_t max_connectives);

/// Closure of {f} under `depth` rounds of single-step rewrites at any
/// subterm: tensor commutativity and associativity, currying, and the unit
/// laws 1*A = A, A*1 = A, 1 -o A = A, all in both directions. A -o 1 = A is
/// deliberately absent. Throws BoundsTooLarge above max_rewrite_depth.
std::set<Formula> rewrite_variants(const Formula &f, std::size_t depth);

/// All single-step rewrites of f (one round of rewrite_variants, minus f).
std::vector<Formula> rewrite_neighbours(const Formula &f);

} // namespace lgraph::oracle

#endif
