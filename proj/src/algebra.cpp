#include "lgraph/algebra.hpp"

namespace lgraph {

LogicalGraph empty_graph() { return LogicalGraph(RawGraph()); }

LogicalGraph singleton(const LabelId &l) {
  return LogicalGraph(RawGraph({{VertexId("v0"), l}}, {}));
}

bool vertex_equivalent(const RawGraph &g, const RawGraph &h) {
  return g.labelling() == h.labelling();
}

namespace {

VMap identity_on(const RawGraph &g) {
  std::vector<std::pair<VertexId, VertexId>> entries;
  entries.reserve(g.vertex_count());
  for (const auto &[v, l] : g.labelling())
    entries.emplace_back(v, v);
  return VMap(boost::container::ordered_unique_range, entries.begin(),
              entries.end());
}

SumResult disjoint_union(const RawGraph &h, const RawGraph &k,
                         std::vector<Edge> extra) {
  auto [renamed, inj1] = rename_apart(h, k.vertices());
  RawGraph::Labelling lab = renamed.labelling();
  lab.insert(lab.end(), k.labelling().begin(), k.labelling().end());
  std::vector<Edge> edges(renamed.edges().begin(), renamed.edges().end());
  edges.insert(edges.end(), k.edges().begin(), k.edges().end());
  for (auto &e : extra)
    edges.push_back({inj1.at(e.src), std::move(e.dst)});
  return {RawGraph(std::move(lab), std::move(edges)), std::move(inj1),
          identity_on(k)};
}

} // namespace

SumResult add(const RawGraph &h, const RawGraph &k) {
  return disjoint_union(h, k, {});
}

RawGraph subtract(const RawGraph &h, const RawGraph &k) {
  for (const auto &[v, l] : k.labelling()) {
    if (!h.contains(v))
      throw Error(ErrorKind::NotASubgraphByName,
                  "vertex " + v.str() + " is not in the graph subtracted from",
                  {v});
    if (h.label(v) != l)
      throw Error(ErrorKind::NotASubgraphByName,
                  "vertex " + v.str() + " is labelled " + h.label(v).str() +
                      ", not " + l.str(),
                  {v});
  }
  RawGraph::Labelling lab;
  lab.reserve(h.vertex_count() - k.vertex_count());
  for (const auto &entry : h.labelling())
    if (!k.contains(entry.first))
      lab.push_back(entry);
  std::vector<Edge> edges;
  for (const auto &e : h.edges())
    if (!k.contains(e.src) && !k.contains(e.dst))
      edges.push_back(e);
  return RawGraph(std::move(lab), std::move(edges));
}

SumResult implies(const RawGraph &h, const RawGraph &k) {
  // Extra edges are given with h's original source names; disjoint_union
  // maps them through the renaming.
  std::vector<Edge> extra;
  const VSet ch = conclusions(h), ck = conclusions(k);
  extra.reserve(ch.size() * ck.size());
  for (const auto &v : ch)
    for (const auto &w : ck)
      extra.push_back({v, w});
  return disjoint_union(h, k, std::move(extra));
}

} // namespace lgraph
