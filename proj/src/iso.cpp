#include "lgraph/iso.hpp"

#include <algorithm>
#include <iterator>

#include <boost/container/small_vector.hpp>

#include "lgraph/traversal.hpp"

namespace lgraph {

namespace {

/// Shared core of vertex_match_perms. `asms1` and `asms2` are ascending
/// vertex sequences read through `get`; results are appended to `out`.
template <class Seq1, class Seq2, class Get>
void match_assumptions(const RawGraph &g1, const Seq1 &asms1, const RawGraph &g2,
                       const Seq2 &asms2, Get get, const VMap &m,
                       std::vector<VMap> &out) {
  if (std::size(asms1) != std::size(asms2))
    return;
  auto in_asms2 = [&](const VertexId &w) {
    for (const auto &a : asms2)
      if (get(a) == w)
        return true;
    return false;
  };
  auto mapped_onto = [&](const VertexId &w) {
    for (const auto &[from, to] : m)
      if (to == w)
        return true;
    return false;
  };

  boost::container::small_vector<const VertexId *, 8> pending;
  for (const auto &a : asms1) {
    const VertexId &v = get(a);
    auto it = m.find(v);
    if (it == m.end())
      pending.push_back(&v);
    else if (!in_asms2(it->second))
      return;
  }
  if (pending.empty()) {
    out.push_back(m);
    return;
  }
  boost::container::small_vector<const VertexId *, 8> targets;
  for (const auto &a : asms2)
    if (!mapped_onto(get(a)))
      targets.push_back(&get(a));
  if (targets.size() != pending.size())
    return;

  // Depth-first over assignments of pending[i], first target first.
  const std::size_t n = pending.size();
  boost::container::small_vector<std::size_t, 8> choice(n, 0);
  boost::container::small_vector<char, 8> taken(n, 0);
  VMap current = m;
  std::size_t i = 0;
  while (true) {
    std::size_t t = choice[i];
    while (t < n && (taken[t] || g2.label(*targets[t]) != g1.label(*pending[i])))
      ++t;
    if (t == n) {
      if (i == 0)
        return;
      --i;
      taken[choice[i]] = 0;
      current.erase(*pending[i]);
      ++choice[i];
      continue;
    }
    choice[i] = t;
    taken[t] = 1;
    current.emplace(*pending[i], *targets[t]);
    if (i + 1 == n) {
      out.push_back(current);
      taken[t] = 0;
      current.erase(*pending[i]);
      ++choice[i];
    } else {
      choice[++i] = 0;
    }
  }
}

} // namespace

std::vector<VMap> vertex_match_perms(const RawGraph &g1, const VSet &asms1,
                                     const RawGraph &g2, const VSet &asms2,
                                     const VMap &m) {
  std::vector<VMap> out;
  match_assumptions(g1, asms1, g2, asms2, [](const VertexId &v) -> const VertexId & { return v; },
                    m, out);
  return out;
}

std::vector<VMap> mk_graph_iso(const RawGraph &g1, const VertexId &v1,
                               const RawGraph &g2, const VertexId &v2,
                               const VMap &seed) {
  if (g1.label(v1) != g2.label(v2))
    return {};
  VMap start = seed;
  if (auto it = seed.find(v1); it != seed.end()) {
    if (it->second != v2)
      return {};
  } else {
    for (const auto &[from, to] : seed)
      if (to == v2)
        return {};
    start.emplace(v1, v2);
  }

  struct State {
    std::vector<VMap> maps;
    std::vector<VMap> spare; // reused as the next round's buffer
    VSet explored;
  };
  State init{{std::move(start)}, {}, {}};
  init.explored.reserve(g1.vertex_count());
  for (const auto &[from, to] : seed)
    init.explored.insert(from);

  auto iso_trav = [&](const VertexId &x, State s) -> std::pair<Action, State> {
    if (s.maps.empty())
      return {Action::Stop, std::move(s)};
    if (!s.explored.insert(x).second)
      return {Action::Skip, std::move(s)};
    auto asms1 = g1.in_edges(x);
    auto source = [](const Edge &e) -> const VertexId & { return e.src; };
    s.spare.clear();
    for (const auto &m : s.maps)
      match_assumptions(g1, asms1, g2, g2.in_edges(m.at(x)), source, m, s.spare);
    std::swap(s.maps, s.spare);
    return {s.maps.empty() ? Action::Stop : Action::Continue, std::move(s)};
  };
  return traverse_dfs(iso_trav, g1, v1, std::move(init)).maps;
}

std::vector<VMap> mk_graph_iso(const RawGraph &g1, const VertexId &v1,
                               const RawGraph &g2, const VertexId &v2) {
  return mk_graph_iso(g1, v1, g2, v2, VMap{});
}

bool is_isomorphism(const RawGraph &g1, const RawGraph &g2, const VMap &m) {
  if (g1.vertex_count() != g2.vertex_count() || m.size() != g1.vertex_count() ||
      g1.edge_count() != g2.edge_count())
    return false;
  VSet image;
  for (const auto &[v, l] : g1.labelling()) {
    auto it = m.find(v);
    if (it == m.end() || !g2.contains(it->second) || g2.label(it->second) != l)
      return false;
    image.insert(it->second);
  }
  if (image.size() != g2.vertex_count())
    return false;
  // Injective on vertices and equal edge counts: forward preservation
  // implies reflection.
  for (const auto &e : g1.edges())
    if (!g2.has_edge(m.at(e.src), m.at(e.dst)))
      return false;
  return true;
}

namespace {

bool same_label_multiset(const RawGraph &g1, const RawGraph &g2) {
  auto sorted_labels = [](const RawGraph &g) {
    boost::container::small_vector<const LabelId *, 16> out;
    for (const auto &[v, l] : g.labelling())
      out.push_back(&l);
    std::sort(out.begin(), out.end(), [](const LabelId *a, const LabelId *b) { return *a < *b; });
    return out;
  };
  auto a = sorted_labels(g1), b = sorted_labels(g2);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const LabelId *x, const LabelId *y) { return *x == *y; });
}

/// Backtracking over conclusions of g1; `emit` returns false to stop.
template <class Emit>
void search_isomorphisms(const RawGraph &g1, const RawGraph &g2, Emit emit) {
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count() ||
      !same_label_multiset(g1, g2))
    return;
  const VSet c1 = conclusions(g1);
  const VSet c2 = conclusions(g2);
  if (c1.size() != c2.size())
    return;
  const std::vector<VertexId> order(c1.begin(), c1.end());

  auto extend = [&](auto &self, std::size_t i, const VMap &m) -> bool {
    if (i == order.size())
      return is_isomorphism(g1, g2, m) ? emit(m) : true;
    const VertexId &c = order[i];
    for (const auto &t : c2) {
      if (g1.label(c) != g2.label(t))
        continue;
      bool used = false;
      for (const auto &[from, to] : m)
        if (to == t) {
          used = true;
          break;
        }
      if (used)
        continue;
      for (const auto &next : mk_graph_iso(g1, c, g2, t, m))
        if (!self(self, i + 1, next))
          return false;
    }
    return true;
  };
  extend(extend, 0, VMap{});
}

} // namespace

std::optional<VMap> alpha_equiv(const RawGraph &g1, const RawGraph &g2) {
  std::optional<VMap> found;
  search_isomorphisms(g1, g2, [&](const VMap &m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<VMap> all_isomorphisms(const RawGraph &g1, const RawGraph &g2) {
  std::vector<VMap> out;
  search_isomorphisms(g1, g2, [&](const VMap &m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace lgraph
