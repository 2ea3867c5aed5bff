#include <doctest.h>

#include <algorithm>
#include <random>

#include "lgraph/graph.hpp"
#include "support.hpp"

using namespace lgraph;
using namespace lgraph::test;

namespace {

using Set = std::set<std::string>;

/// The five-step recursive well-formedness procedure, run literally on vertex
/// subsets with edges restricted to the current subset.
bool literal_well_formed(const RawGraph &g, const Set &level) {
  if (level.empty())
    return true;
  auto succ_in = [&](const std::string &x) {
    Set out;
    for (const auto &e : g.edges())
      if (e.src.str() == x && level.contains(e.dst.str()))
        out.insert(e.dst.str());
    return out;
  };
  auto pred_in = [&](const std::string &x) {
    Set out;
    for (const auto &e : g.edges())
      if (e.dst.str() == x && level.contains(e.src.str()))
        out.insert(e.src.str());
    return out;
  };
  std::map<Set, Set> cliques;
  for (const auto &x : level)
    if (succ_in(x).empty())
      cliques[pred_in(x)].insert(x);

  Set covered;
  std::vector<Set> assumptions;
  for (const auto &[premises, members] : cliques) {
    for (const auto &w : premises)
      if (succ_in(w) != members)
        return false;
    Set above = bfs_up_closure(g, premises);
    Set part = members;
    part.insert(above.begin(), above.end());
    for (const auto &v : part)
      if (!covered.insert(v).second)
        return false;
    assumptions.push_back(above);
  }
  if (covered != level)
    return false;
  return std::all_of(assumptions.begin(), assumptions.end(),
                     [&](const Set &a) { return literal_well_formed(g, a); });
}

/// All DAGs on n vertices whose edges go from lower to higher index.
RawGraph upper_dag(int n, unsigned mask) {
  RawGraph::Labelling lab;
  for (int i = 0; i < n; ++i)
    lab.emplace_back(VertexId("x" + std::to_string(i)), LabelId("p"));
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (1u << bit))
        edges.push_back({lab[i].first, lab[j].first});
  return RawGraph(std::move(lab), std::move(edges));
}

bool accepts(const RawGraph &g) {
  try {
    validate(g);
    return true;
  } catch (const Error &) {
    return false;
  }
}

} // namespace

TEST_CASE("RawGraph construction") {
  CHECK_THROWS_AS(make_graph({{"a", "p"}}, {{"a", "b"}}), Error);
  try {
    make_graph({{"a", "p"}}, {{"a", "b"}});
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::DanglingEdge);
  }
  RawGraph g = make_graph({{"b", "q"}, {"a", "p"}, {"a", "p"}}, {{"a", "b"}, {"a", "b"}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.labelling().front().first == "a"_v);
  CHECK_THROWS_AS(make_graph({{"a", "p"}, {"a", "q"}}), Error);
}

TEST_CASE("validate") {
  SUBCASE("graph A is accepted") { CHECK_NOTHROW(validate(graph_a())); }
  SUBCASE("empty graph is accepted") { CHECK_NOTHROW(validate(RawGraph())); }
  SUBCASE("N-graph is rejected with the overlap vertex as witness") {
    try {
      validate(n_graph());
      FAIL("accepted the N-graph");
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::NotWellFormed);
      REQUIRE(!e.witness().empty());
      CHECK(e.witness().front() == "b"_v);
      CHECK(std::string(e.what()).find("overlap at b") != std::string::npos);
    }
  }
  SUBCASE("self loop is cyclic") {
    try {
      validate(make_graph({{"v", "p"}}, {{"v", "v"}}));
      FAIL("accepted a self loop");
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::CyclicEdges);
      CHECK(e.witness() == std::vector<VertexId>{"v"_v});
    }
  }
  SUBCASE("longer cycle witness") {
    try {
      validate(make_graph({{"u", "p"}, {"w", "p"}, {"z", "p"}}, {{"u", "w"}, {"w", "u"}, {"z", "u"}}));
      FAIL("accepted a cycle");
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::CyclicEdges);
      CHECK(e.witness().size() == 2);
    }
  }
  SUBCASE("two parts sharing an assumption vertex") {
    // x -o y and x -o z would need x twice.
    RawGraph g = make_graph({{"x", "x"}, {"y", "y"}, {"z", "z"}, {"c", "c"}, {"d", "d"}},
                            {{"x", "y"}, {"x", "z"}, {"y", "c"}, {"z", "d"}});
    CHECK_FALSE(accepts(g));
  }
}

TEST_CASE("validate agrees with the literal recursive procedure on every small DAG") {
  for (int n = 1; n <= 6; ++n) {
    const unsigned pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      RawGraph g = upper_dag(n, mask);
      Set all;
      for (const auto &[v, l] : g.labelling())
        all.insert(v.str());
      REQUIRE_MESSAGE(accepts(g) == literal_well_formed(g, all), "n=" << n << " mask=" << mask);
    }
  }
}

TEST_CASE("clique_tree parts partition the vertices") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    int n = 1 + rng() % 7;
    RawGraph g = upper_dag(n, rng() & ((1u << (n * (n - 1) / 2)) - 1));
    if (!accepts(g))
      continue;
    ++checked;
    CliqueTree t = clique_tree(g);
    std::map<VertexId, int> seen;
    for (const auto &c : t.cliques) {
      for (const auto &v : c.members)
        ++seen[v];
      // Members are conclusions of their level and share predecessors.
      for (const auto &v : c.members)
        CHECK(predecessors(g, v) == c.premises);
    }
    CHECK(seen.size() == g.vertex_count());
    for (const auto &[v, k] : seen)
      CHECK(k == 1);
  }
  CHECK(checked > 100);
}

TEST_CASE("conclusions") {
  CHECK(conclusions(validate(graph_a())) == vset({"e", "g"}));
  CHECK(conclusions(RawGraph()).empty());
  CHECK(conclusions(chain_pqr()) == vset({"r"}));
}

TEST_CASE("predecessors") {
  CHECK(predecessors(chain_pqr(), "r"_v) == vset({"q"}));
  CHECK(predecessors(graph_a(), "e"_v) == vset({"b", "c", "d"}));
  CHECK(predecessors(chain_pqr(), "p"_v).empty());
  CHECK_THROWS_AS(predecessors(chain_pqr(), "zz"_v), Error);
}

TEST_CASE("assumption graphs") {
  LogicalGraph chain = validate(chain_pqr());
  CHECK(assumption_graph(chain, "q"_v) == make_graph({{"p", "p"}, {"q", "q"}}, {{"p", "q"}}));
  CHECK(assumption_graph(chain, "p"_v) == make_graph({{"p", "p"}}));
  CHECK(full_assumption_graph(chain, "r"_v) == make_graph({{"p", "p"}, {"q", "q"}}, {{"p", "q"}}));
  CHECK(full_assumption_graph(chain, "p"_v).empty());
  CHECK_THROWS_AS(assumption_graph(chain, "x"_v), Error);

  LogicalGraph a = validate(graph_a());
  Set expected_e = bfs_up_closure(a, {"e"});
  CHECK(expected_e == Set{"a", "b", "c", "d", "e"});
  CHECK(names_of(assumption_graph(a, "e"_v).vertices()) == expected_e);
  Set expected_full = bfs_up_closure(a, {"b", "c", "d"});
  CHECK(names_of(full_assumption_graph(a, "e"_v).vertices()) == expected_full);
  CHECK(full_assumption_graph(a, "e"_v) == induced_subgraph(a, vset({"a", "b", "c", "d"})));
}

TEST_CASE("assumption graphs are up-closed and valid") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + rng() % 7;
    RawGraph raw = upper_dag(n, rng() & ((1u << (n * (n - 1) / 2)) - 1));
    if (!accepts(raw))
      continue;
    LogicalGraph g = validate(raw);
    for (const auto &v : g.vertices()) {
      LogicalGraph up = assumption_graph(g, v);
      CHECK(conclusions(up) == VSet{v});
      for (const auto &w : up.vertices())
        for (const auto &p : predecessors(g, w))
          CHECK(up.contains(p));
      CHECK(accepts(up));
      CHECK(accepts(full_assumption_graph(g, v)));
    }
  }
}

TEST_CASE("induced_subgraph") {
  CHECK(induced_subgraph(chain_pqr(), vset({"p", "r"})) == make_graph({{"p", "p"}, {"r", "r"}}));
  CHECK(induced_subgraph(chain_pqr(), chain_pqr().vertices()) == chain_pqr());
  CHECK(induced_subgraph(graph_a(), vset({"b", "c", "e"})) ==
        make_graph({{"b", "b"}, {"c", "c"}, {"e", "e"}}, {{"b", "e"}, {"c", "e"}}));
  CHECK_THROWS_AS(induced_subgraph(chain_pqr(), vset({"x"})), Error);
}

TEST_CASE("subgraph_relation") {
  RawGraph h = make_graph({{"p", "p"}, {"q", "q"}}, {{"p", "q"}});
  CHECK(subgraph_relation(induced_subgraph(h, vset({"p"})), h) == SubgraphRelation::StrictVertexSubgraph);
  CHECK(subgraph_relation(make_graph({{"p", "p"}, {"q", "q"}}), h) == SubgraphRelation::VertexSubgraph);
  CHECK(subgraph_relation(make_graph({{"z", "p"}}), h) == SubgraphRelation::NotSubgraph);
  CHECK(subgraph_relation(make_graph({{"p", "q"}}), h) == SubgraphRelation::NotSubgraph);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + rng() % 7;
    RawGraph g = upper_dag(n, rng() & ((1u << (n * (n - 1) / 2)) - 1));
    VSet w;
    for (const auto &v : g.vertices())
      if (rng() % 2)
        w.insert(v);
    CHECK(subgraph_relation(induced_subgraph(g, w), g) == SubgraphRelation::StrictVertexSubgraph);
  }
}

TEST_CASE("rename_apart") {
  RawGraph g = chain_pqr();
  auto same = rename_apart(g, vset({"x"}));
  CHECK(same.graph == g);
  CHECK(same.renaming == vmap({{"p", "p"}, {"q", "q"}, {"r", "r"}}));

  auto one = rename_apart(make_graph({{"v0", "p"}}), vset({"v0"}));
  CHECK(one.graph == make_graph({{"v1", "p"}}));
  CHECK(one.renaming == vmap({{"v0", "v1"}}));

  // Fresh names skip both the avoided set and the graph's own names.
  auto many = rename_apart(make_graph({{"v0", "p"}, {"v1", "q"}, {"v2", "r"}}, {{"v0", "v2"}}),
                           vset({"v0", "v1", "v3"}));
  CHECK(many.renaming == vmap({{"v0", "v4"}, {"v1", "v5"}, {"v2", "v2"}}));
  CHECK(many.graph == make_graph({{"v4", "p"}, {"v5", "q"}, {"v2", "r"}}, {{"v4", "v2"}}));
  CHECK(rename_apart(g, g.vertices()).renaming == rename_apart(g, g.vertices()).renaming);

  auto bare = rename_apart(make_graph({{"a", "p"}}), vset({"a", "a1"}));
  CHECK(bare.renaming == vmap({{"a", "a2"}}));
}
