#ifndef LGRAPH_TESTS_SUPPORT_HPP
#define LGRAPH_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgraph/graph.hpp"

namespace lgraph::test {

using Labels = std::initializer_list<std::pair<const char *, const char *>>;
using Edges = std::initializer_list<std::pair<const char *, const char *>>;

inline RawGraph make_graph(Labels labels, Edges edges = {}) {
  RawGraph::Labelling lab;
  for (auto [v, l] : labels)
    lab.emplace_back(VertexId(v), LabelId(l));
  std::vector<Edge> es;
  for (auto [s, d] : edges)
    es.push_back({VertexId(s), VertexId(d)});
  return RawGraph(std::move(lab), std::move(es));
}

inline VSet vset(std::initializer_list<const char *> names) {
  VSet out;
  for (auto n : names)
    out.insert(VertexId(n));
  return out;
}

inline VMap vmap(std::initializer_list<std::pair<const char *, const char *>> pairs) {
  VMap out;
  for (auto [a, b] : pairs)
    out.emplace(VertexId(a), VertexId(b));
  return out;
}

/// Graph A, the graph of (f -o g) * ((a -o b * c) * d -o e), vertices
/// named after their labels.
inline RawGraph graph_a() {
  return make_graph({{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}, {"e", "e"}, {"f", "f"}, {"g", "g"}},
                    {{"f", "g"}, {"a", "b"}, {"a", "c"}, {"b", "e"}, {"c", "e"}, {"d", "e"}});
}

/// The N-shaped graph with no formula reading.
inline RawGraph n_graph() {
  return make_graph({{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}},
                    {{"a", "c"}, {"b", "c"}, {"b", "d"}});
}

inline RawGraph chain_pqr() {
  return make_graph({{"p", "p"}, {"q", "q"}, {"r", "r"}}, {{"p", "q"}, {"q", "r"}});
}

inline RawGraph diamond() {
  return make_graph({{"a", "a"}, {"b", "b"}, {"c", "c"}, {"d", "d"}},
                    {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

/// Two p's implying one q: {v1:p, v2:p, v0:q; v1->v0, v2->v0}.
inline RawGraph fork_pq() {
  return make_graph({{"v0", "q"}, {"v1", "p"}, {"v2", "p"}}, {{"v1", "v0"}, {"v2", "v0"}});
}

/// Independent reachability: plain breadth-first search over an edge list.
inline std::set<std::string> bfs_up_closure(const RawGraph &g, std::set<std::string> roots) {
  std::multimap<std::string, std::string> preds;
  for (const auto &e : g.edges())
    preds.emplace(e.dst.str(), e.src.str());
  std::set<std::string> seen;
  std::vector<std::string> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    std::string v = queue.back();
    queue.pop_back();
    if (!seen.insert(v).second)
      continue;
    auto [lo, hi] = preds.equal_range(v);
    for (auto it = lo; it != hi; ++it)
      queue.push_back(it->second);
  }
  return seen;
}

inline std::set<std::string> names_of(const VSet &s) {
  std::set<std::string> out;
  for (const auto &v : s)
    out.insert(v.str());
  return out;
}

} // namespace lgraph::test

#endif
