#include <doctest.h>

#include <algorithm>

#include "lgraph/algebra.hpp"
#include "lgraph/iso.hpp"
#include "lgraph/mill.hpp"
#include "support.hpp"

using namespace lgraph;
using namespace lgraph::test;

namespace {

bool iso(const RawGraph &a, const RawGraph &b) { return alpha_equiv(a, b).has_value(); }

std::vector<LabelId> labels_of(const RawGraph &g) {
  std::vector<LabelId> out;
  for (const auto &[v, l] : g.labelling())
    out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("empty and singleton") {
  CHECK(conclusions(empty_graph()).empty());
  CHECK(empty_graph().vertex_count() == 0);
  CHECK(singleton("p"_l) == make_graph({{"v0", "p"}}));
  CHECK(conclusions(singleton("p"_l)) == vset({"v0"}));
  CHECK(alpha_equiv(singleton("p"_l), singleton("p"_l)).has_value());
  CHECK(iso(add(empty_graph(), graph_a()).graph, graph_a()));
}

TEST_CASE("vertex_equivalent") {
  RawGraph a = graph_a();
  CHECK(vertex_equivalent(a, induced_subgraph(a, a.vertices())));
  RawGraph bare(a.labelling(), {});
  CHECK(vertex_equivalent(a, bare));
  CHECK_FALSE(vertex_equivalent(a, rename_apart(a, a.vertices()).graph));
  CHECK(vertex_equivalent(RawGraph(), RawGraph()));
}

TEST_CASE("add") {
  SumResult two = add(singleton("p"_l), singleton("p"_l));
  CHECK(two.graph == make_graph({{"v0", "p"}, {"v1", "p"}}));
  CHECK(two.inj1 == vmap({{"v0", "v1"}}));
  CHECK(two.inj2 == vmap({{"v0", "v0"}}));

  RawGraph g = to_graph(parse("p -o q")), h = graph_a();
  CHECK(iso(add(g, h).graph, add(h, g).graph));
  RawGraph k = to_graph(parse("a * b -o c"));
  CHECK(iso(add(add(g, h).graph, k).graph, add(g, add(h, k).graph).graph));

  // Injections are label-preserving with disjoint images covering the sum.
  SumResult s = add(g, g);
  VSet image;
  for (const auto &[from, to] : s.inj1) {
    CHECK(g.label(from) == s.graph.label(to));
    image.insert(to);
  }
  for (const auto &[from, to] : s.inj2)
    CHECK(image.insert(to).second);
  CHECK(image == s.graph.vertices());
  std::vector<LabelId> expect = labels_of(g), once = expect;
  expect.insert(expect.end(), once.begin(), once.end());
  std::sort(expect.begin(), expect.end());
  CHECK(labels_of(s.graph) == expect);
}

TEST_CASE("subtract") {
  RawGraph chain = chain_pqr();
  CHECK(subtract(chain, induced_subgraph(chain, vset({"r"}))) ==
        make_graph({{"p", "p"}, {"q", "q"}}, {{"p", "q"}}));
  CHECK(subtract(chain, chain) == RawGraph());
  CHECK(subtract(graph_a(), graph_a()).empty());

  // Removing a middle vertex also drops both of its edges.
  CHECK(subtract(chain, make_graph({{"q", "q"}})) == make_graph({{"p", "p"}, {"r", "r"}}));

  try {
    subtract(chain, make_graph({{"x", "p"}}));
    FAIL("subtracted an absent vertex");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotASubgraphByName);
  }
  CHECK_THROWS_AS(subtract(chain, make_graph({{"p", "q"}})), Error);

  // (H + K) - H1 = K using the renaming of the sum.
  RawGraph h = to_graph(parse("p -o q")), k = to_graph(parse("q * r"));
  SumResult s = add(h, k);
  CHECK(iso(subtract(s.graph, apply_renaming(h, s.inj1)), k));
}

TEST_CASE("implies") {
  CHECK(implies(singleton("p"_l), singleton("q"_l)).graph ==
        make_graph({{"v0", "q"}, {"v1", "p"}}, {{"v1", "v0"}}));

  RawGraph pq = to_graph(parse("p -o q"));
  CHECK(iso(implies(pq, singleton("r"_l)).graph, chain_pqr()));

  // Worked by hand: p's vertex points at the conclusions b and c, while a
  // already points at b.
  RawGraph rhs = to_graph(parse("(a -o b) * c"));
  SumResult bad = implies(singleton("p"_l), rhs);
  RawGraph expected = make_graph({{"A", "a"}, {"B", "b"}, {"C", "c"}, {"P", "p"}},
                                 {{"A", "B"}, {"P", "B"}, {"P", "C"}});
  CHECK(iso(bad.graph, expected));
  CHECK_THROWS_AS(validate(bad.graph), Error);

  // Exactly |C_H| * |C_K| extra edges.
  RawGraph h = to_graph(parse("a * b")), k = to_graph(parse("c * d * e"));
  CHECK(implies(h, k).graph.edge_count() == add(h, k).graph.edge_count() + 2 * 3);
}
