#ifndef LGRAPH_GRAPH_HPP
#define LGRAPH_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lgraph/error.hpp"
#include "lgraph/names.hpp"

namespace lgraph {

struct Edge {
  VertexId src;
  VertexId dst;

  friend auto operator<=>(const Edge &, const Edge &) = default;
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Unvalidated labelled digraph. Immutable once built; every edge endpoint is
/// a labelled vertex. The label set is the image of the labelling.
///
/// Storage is two sorted vectors of edges (by source and by destination) so
/// successor and predecessor ranges are contiguous.
class RawGraph {
public:
  using Labelling = std::vector<std::pair<VertexId, LabelId>>;

  RawGraph() = default;

  /// Sorts and deduplicates both inputs. Throws DanglingEdge if an edge
  /// mentions an unlabelled vertex, InvalidGraphFile for an empty vertex name
  /// or a vertex labelled twice with different labels.
  RawGraph(Labelling labelling, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return out_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  bool contains(const VertexId &v) const noexcept;
  bool has_edge(const VertexId &src, const VertexId &dst) const noexcept;

  /// Throws UnknownVertex.
  const LabelId &label(const VertexId &v) const;

  /// Sorted by vertex name.
  const Labelling &labelling() const noexcept { return labels_; }
  /// Sorted by (src, dst).
  std::span<const Edge> edges() const noexcept { return out_; }

  /// Edges leaving v, sorted by dst. Empty for unknown vertices.
  std::span<const Edge> out_edges(const VertexId &v) const noexcept;
  /// Edges entering v, sorted by src. Empty for unknown vertices.
  std::span<const Edge> in_edges(const VertexId &v) const noexcept;

  VSet vertices() const;

  friend bool operator==(const RawGraph &a, const RawGraph &b) {
    return a.labels_ == b.labels_ && a.out_ == b.out_;
  }

private:
  Labelling labels_;
  std::vector<Edge> out_; // sorted by (src, dst)
  std::vector<Edge> in_;  // sorted by (dst, src)
};

/// A RawGraph that is acyclic and well-formed. Only produced by `validate`
/// and by operations that preserve validity.
class LogicalGraph : public RawGraph {
public:
  LogicalGraph() = default;

private:
  explicit LogicalGraph(RawGraph g) : RawGraph(std::move(g)) {}

  friend LogicalGraph validate(const RawGraph &g);
  friend LogicalGraph assumption_graph(const LogicalGraph &g,
                                       const VertexId &v);
  friend LogicalGraph full_assumption_graph(const LogicalGraph &g,
                                            const VertexId &v);
  friend LogicalGraph singleton(const LabelId &l);
  friend LogicalGraph empty_graph();
};

// --- decomposition into conclusion cliques -------------------------------

/// One clique of conclusions sharing a predecessor set, together with the
/// index of the level built from that predecessor set (its assumptions).
struct CliqueEntry {
  VSet members;
  VSet premises;
  std::size_t assumptions = 0; // index into CliqueTree::levels
};

/// Flat form of the recursive conclusion-clique decomposition. Level 0 is the
/// whole graph; a level with no cliques is the empty graph.
struct CliqueTree {
  struct Level {
    std::vector<std::size_t> cliques; // indices into CliqueTree::cliques
  };
  std::vector<Level> levels;
  std::vector<CliqueEntry> cliques;
};

/// Decomposes g level by level. Throws CyclicEdges or NotWellFormed.
CliqueTree clique_tree(const RawGraph &g);

// --- core operations -----------------------------------------------------

/// Promotes g after checking acyclicity and well-formedness.
/// Throws CyclicEdges (witness: a cycle) or NotWellFormed.
LogicalGraph validate(const RawGraph &g);

/// Vertices with no outgoing edge.
VSet conclusions(const RawGraph &g);

/// Throws UnknownVertex.
VSet predecessors(const RawGraph &g, const VertexId &v);
VSet successors(const RawGraph &g, const VertexId &v);

/// v together with every vertex that has a directed path to v.
VSet up_closure(const RawGraph &g, const VertexId &v);
VSet up_closure(const RawGraph &g, const VSet &roots);

LogicalGraph assumption_graph(const LogicalGraph &g, const VertexId &v);
LogicalGraph full_assumption_graph(const LogicalGraph &g, const VertexId &v);

/// Throws UnknownVertex if w is not contained in g.
RawGraph induced_subgraph(const RawGraph &g, const VSet &w);

enum class SubgraphRelation { NotSubgraph, VertexSubgraph, StrictVertexSubgraph };

/// Name-sensitive comparison of g against h.
SubgraphRelation subgraph_relation(const RawGraph &g, const RawGraph &h);

struct Renamed {
  RawGraph graph;
  VMap renaming; // total on the input's vertices
};

/// Renames every vertex of g that occurs in `avoid` to a fresh name outside
/// avoid and g. Fresh names strip trailing digits and append the smallest
/// free number.
Renamed rename_apart(const RawGraph &g, const VSet &avoid);

/// Applies an injective renaming that must be defined on every vertex of g.
RawGraph apply_renaming(const RawGraph &g, const VMap &m);

} // namespace lgraph

#endif
