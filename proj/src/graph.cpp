#include "lgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "lgraph/traversal.hpp"

namespace lgraph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::UnknownVertex: return "UnknownVertex";
  case ErrorKind::DanglingEdge: return "DanglingEdge";
  case ErrorKind::CyclicEdges: return "CyclicEdges";
  case ErrorKind::NotWellFormed: return "NotWellFormed";
  case ErrorKind::NotASubgraphByName: return "NotASubgraphByName";
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::NotInFragment: return "NotInFragment";
  case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
  case ErrorKind::InvalidGraphFile: return "InvalidGraphFile";
  case ErrorKind::Io: return "Io";
  case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

namespace {

bool by_dst(const Edge &a, const Edge &b) {
  return std::tie(a.dst, a.src) < std::tie(b.dst, b.src);
}

VSet sorted_vset(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return VSet(boost::container::ordered_unique_range, vs.begin(), vs.end());
}

std::string show(const VSet &s) {
  std::string out = "{";
  bool first = true;
  for (const auto &v : s) {
    if (!first)
      out += ", ";
    out += v.str();
    first = false;
  }
  return out + "}";
}

[[noreturn]] void unknown_vertex(const VertexId &v) {
  throw Error(ErrorKind::UnknownVertex, "unknown vertex " + v.str(), {v});
}

} // namespace

// --- RawGraph ------------------------------------------------------------

RawGraph::RawGraph(Labelling labelling, std::vector<Edge> edges)
    : labels_(std::move(labelling)), out_(std::move(edges)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].first.empty() || labels_[i].second.empty())
      throw Error(ErrorKind::InvalidGraphFile, "empty vertex or label name");
    if (i > 0 && labels_[i - 1].first == labels_[i].first)
      throw Error(ErrorKind::InvalidGraphFile,
                  "vertex " + labels_[i].first.str() + " has two labels",
                  {labels_[i].first});
  }

  std::sort(out_.begin(), out_.end());
  out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
  for (const auto &e : out_) {
    for (const auto *end : {&e.src, &e.dst})
      if (!contains(*end))
        throw Error(ErrorKind::DanglingEdge,
                    "edge " + e.src.str() + " -> " + e.dst.str() +
                        " mentions unlabelled vertex " + end->str(),
                    {*end});
  }
  in_ = out_;
  std::sort(in_.begin(), in_.end(), by_dst);
}

bool RawGraph::contains(const VertexId &v) const noexcept {
  auto it = std::lower_bound(
      labels_.begin(), labels_.end(), v,
      [](const auto &entry, const VertexId &key) { return entry.first < key; });
  return it != labels_.end() && it->first == v;
}

bool RawGraph::has_edge(const VertexId &src, const VertexId &dst) const noexcept {
  return std::binary_search(out_.begin(), out_.end(), Edge{src, dst});
}

const LabelId &RawGraph::label(const VertexId &v) const {
  auto it = std::lower_bound(
      labels_.begin(), labels_.end(), v,
      [](const auto &entry, const VertexId &key) { return entry.first < key; });
  if (it == labels_.end() || it->first != v)
    unknown_vertex(v);
  return it->second;
}

std::span<const Edge> RawGraph::out_edges(const VertexId &v) const noexcept {
  auto lo = std::lower_bound(out_.begin(), out_.end(), v,
                             [](const Edge &e, const VertexId &k) { return e.src < k; });
  auto hi = std::upper_bound(lo, out_.end(), v,
                             [](const VertexId &k, const Edge &e) { return k < e.src; });
  return {lo, hi};
}

std::span<const Edge> RawGraph::in_edges(const VertexId &v) const noexcept {
  auto lo = std::lower_bound(in_.begin(), in_.end(), v,
                             [](const Edge &e, const VertexId &k) { return e.dst < k; });
  auto hi = std::upper_bound(lo, in_.end(), v,
                             [](const VertexId &k, const Edge &e) { return k < e.dst; });
  return {lo, hi};
}

VSet RawGraph::vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(labels_.size());
  for (const auto &[v, l] : labels_)
    vs.push_back(v);
  return VSet(boost::container::ordered_unique_range, vs.begin(), vs.end());
}

// --- decomposition -------------------------------------------------------

namespace {

/// Index-based adjacency of a RawGraph; vertex i is labelling()[i].
struct Adjacency {
  std::vector<std::vector<std::size_t>> preds, succs;

  explicit Adjacency(const RawGraph &g) : preds(g.vertex_count()), succs(g.vertex_count()) {
    const auto &lab = g.labelling();
    auto index = [&](const VertexId &v) {
      return static_cast<std::size_t>(
          std::lower_bound(lab.begin(), lab.end(), v,
                           [](const auto &e, const VertexId &k) { return e.first < k; }) -
          lab.begin());
    };
    // Edges are sorted by (src, dst), so both lists come out ascending.
    for (const auto &e : g.edges()) {
      std::size_t s = index(e.src), d = index(e.dst);
      succs[s].push_back(d);
      preds[d].push_back(s);
    }
    for (auto &p : preds)
      std::sort(p.begin(), p.end());
  }
};

void check_acyclic(const RawGraph &g, const Adjacency &adj) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> pending(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    pending[i] = adj.succs[i].size();
    if (pending[i] == 0)
      ready.push_back(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t p : adj.preds[v])
      if (--pending[p] == 0)
        ready.push_back(p);
  }
  if (removed == n)
    return;

  // Every leftover vertex has a leftover successor; walk them until a repeat.
  std::size_t start = 0;
  while (pending[start] == 0)
    ++start;
  std::vector<std::size_t> order(n, n);
  std::vector<std::size_t> path;
  std::size_t v = start;
  while (order[v] == n) {
    order[v] = path.size();
    path.push_back(v);
    for (std::size_t s : adj.succs[v])
      if (pending[s] != 0) {
        v = s;
        break;
      }
  }
  std::vector<VertexId> cycle;
  std::string text;
  for (std::size_t i = order[v]; i < path.size(); ++i) {
    cycle.push_back(g.labelling()[path[i]].first);
    text += cycle.back().str() + " -> ";
  }
  text += g.labelling()[v].first.str();
  throw Error(ErrorKind::CyclicEdges, "cycle " + text, std::move(cycle));
}

} // namespace

CliqueTree clique_tree(const RawGraph &g) {
  Adjacency adj(g);
  check_acyclic(g, adj);

  const auto &lab = g.labelling();
  auto name = [&](std::size_t i) -> const VertexId & { return lab[i].first; };
  auto names = [&](const std::vector<std::size_t> &ix) {
    std::vector<VertexId> vs;
    vs.reserve(ix.size());
    for (std::size_t i : ix)
      vs.push_back(name(i));
    return VSet(boost::container::ordered_unique_range, vs.begin(), vs.end());
  };

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level_of(g.vertex_count(), unassigned);

  CliqueTree tree;
  std::deque<std::pair<std::size_t, std::vector<std::size_t>>> work;
  {
    std::vector<std::size_t> sinks;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (adj.succs[i].empty())
        sinks.push_back(i);
    tree.levels.emplace_back();
    work.emplace_back(0, std::move(sinks));
  }

  while (!work.empty()) {
    auto [level, conclusions] = std::move(work.front());
    work.pop_front();

    for (std::size_t c : conclusions) {
      if (level_of[c] != unassigned)
        throw Error(ErrorKind::NotWellFormed,
                    "overlap at " + name(c).str() +
                        ": vertex lies in the assumptions of two cliques",
                    {name(c)});
      level_of[c] = level;
    }

    // Conclusions with identical predecessor sets form one clique.
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t c : conclusions)
      groups[adj.preds[c]].push_back(c);

    for (auto &[premises, members] : groups) {
      for (std::size_t w : premises) {
        if (adj.succs[w] == members)
          continue;
        std::vector<std::size_t> extra;
        std::set_difference(adj.succs[w].begin(), adj.succs[w].end(),
                            members.begin(), members.end(),
                            std::back_inserter(extra));
        std::vector<VertexId> witness{name(w)};
        for (std::size_t x : extra)
          witness.push_back(name(x));
        throw Error(ErrorKind::NotWellFormed,
                    "overlap at " + name(w).str() + ": premise of clique " +
                        show(names(members)) + " also implies " +
                        show(names(extra)),
                    std::move(witness));
      }
      std::size_t child = tree.levels.size();
      tree.levels.emplace_back();
      tree.levels[level].cliques.push_back(tree.cliques.size());
      tree.cliques.push_back({names(members), names(premises), child});
      work.emplace_back(child, premises);
    }
  }
  return tree;
}

// --- core operations -----------------------------------------------------

LogicalGraph validate(const RawGraph &g) {
  clique_tree(g);
  return LogicalGraph(g);
}

VSet conclusions(const RawGraph &g) {
  std::vector<VertexId> out;
  for (const auto &[v, l] : g.labelling())
    if (g.out_edges(v).empty())
      out.push_back(v);
  return VSet(boost::container::ordered_unique_range, out.begin(), out.end());
}

VSet predecessors(const RawGraph &g, const VertexId &v) {
  if (!g.contains(v))
    unknown_vertex(v);
  std::vector<VertexId> out;
  for (const auto &e : g.in_edges(v))
    out.push_back(e.src);
  return VSet(boost::container::ordered_unique_range, out.begin(), out.end());
}

VSet successors(const RawGraph &g, const VertexId &v) {
  if (!g.contains(v))
    unknown_vertex(v);
  std::vector<VertexId> out;
  for (const auto &e : g.out_edges(v))
    out.push_back(e.dst);
  return VSet(boost::container::ordered_unique_range, out.begin(), out.end());
}

VSet up_closure(const RawGraph &g, const VSet &roots) {
  using Seen = std::unordered_set<VertexId>;
  auto mark = [](const VertexId &x, Seen seen) -> std::pair<Action, Seen> {
    bool fresh = seen.insert(x).second;
    return {fresh ? Action::Continue : Action::Skip, std::move(seen)};
  };
  Seen seen;
  for (const auto &r : roots)
    seen = traverse_dfs(mark, g, r, std::move(seen));
  return sorted_vset({seen.begin(), seen.end()});
}

VSet up_closure(const RawGraph &g, const VertexId &v) {
  return up_closure(g, VSet{v});
}

RawGraph induced_subgraph(const RawGraph &g, const VSet &w) {
  for (const auto &v : w)
    if (!g.contains(v))
      unknown_vertex(v);
  RawGraph::Labelling lab;
  lab.reserve(w.size());
  for (const auto &entry : g.labelling())
    if (w.contains(entry.first))
      lab.push_back(entry);
  std::vector<Edge> edges;
  for (const auto &e : g.edges())
    if (w.contains(e.src) && w.contains(e.dst))
      edges.push_back(e);
  return RawGraph(std::move(lab), std::move(edges));
}

// The up-closure of a vertex (or of a clique's premises) in a well-formed
// graph is itself well-formed, so neither result is revalidated.
LogicalGraph assumption_graph(const LogicalGraph &g, const VertexId &v) {
  return LogicalGraph(induced_subgraph(g, up_closure(g, v)));
}

LogicalGraph full_assumption_graph(const LogicalGraph &g, const VertexId &v) {
  return LogicalGraph(induced_subgraph(g, up_closure(g, predecessors(g, v))));
}

SubgraphRelation subgraph_relation(const RawGraph &g, const RawGraph &h) {
  for (const auto &[v, l] : g.labelling())
    if (!h.contains(v) || h.label(v) != l)
      return SubgraphRelation::NotSubgraph;
  for (const auto &e : g.edges())
    if (!h.has_edge(e.src, e.dst))
      return SubgraphRelation::NotSubgraph;
  for (const auto &[v, l] : g.labelling())
    for (const auto &e : h.out_edges(v))
      if (g.contains(e.dst) && !g.has_edge(e.src, e.dst))
        return SubgraphRelation::VertexSubgraph;
  return SubgraphRelation::StrictVertexSubgraph;
}

// --- renaming ------------------------------------------------------------

Renamed rename_apart(const RawGraph &g, const VSet &avoid) {
  std::unordered_set<std::string> taken;
  for (const auto &v : avoid)
    taken.insert(v.str());
  for (const auto &[v, l] : g.labelling())
    taken.insert(v.str());

  // Smallest free suffix only grows while names are handed out, so a cursor
  // per base name is enough.
  std::unordered_map<std::string, unsigned long> cursor;
  std::vector<std::pair<VertexId, VertexId>> entries;
  entries.reserve(g.vertex_count());
  bool renamed_any = false;
  for (const auto &[v, l] : g.labelling()) {
    if (!avoid.contains(v)) {
      entries.emplace_back(v, v);
      continue;
    }
    std::string base = v.str();
    while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back())))
      base.pop_back();
    auto &k = cursor.try_emplace(base, 1).first->second;
    std::string fresh;
    do
      fresh = base + std::to_string(k++);
    while (taken.contains(fresh));
    taken.insert(fresh);
    entries.emplace_back(v, VertexId(fresh));
    renamed_any = true;
  }
  VMap renaming(boost::container::ordered_unique_range, entries.begin(),
                entries.end());
  if (!renamed_any)
    return {g, std::move(renaming)};
  return {apply_renaming(g, renaming), std::move(renaming)};
}

RawGraph apply_renaming(const RawGraph &g, const VMap &m) {
  auto image = [&](const VertexId &v) -> const VertexId & {
    auto it = m.find(v);
    if (it == m.end())
      unknown_vertex(v);
    return it->second;
  };
  RawGraph::Labelling lab;
  lab.reserve(g.vertex_count());
  for (const auto &[v, l] : g.labelling())
    lab.emplace_back(image(v), l);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto &e : g.edges())
    edges.push_back({image(e.src), image(e.dst)});
  return RawGraph(std::move(lab), std::move(edges));
}

} // namespace lgraph
