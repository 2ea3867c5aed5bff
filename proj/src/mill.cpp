#include "lgraph/mill.hpp"

#include <algorithm>
#include <numeric>

#include "lgraph/algebra.hpp"

namespace lgraph {

RawGraph to_graph(const Formula &f) {
  switch (f.kind()) {
  case Formula::Kind::Unit:
    return empty_graph();
  case Formula::Kind::Atom:
    return singleton(f.label());
  case Formula::Kind::Tensor:
    return add(to_graph(f.lhs()), to_graph(f.rhs())).graph;
  case Formula::Kind::Lolli:
    return implies(to_graph(f.lhs()), to_graph(f.rhs())).graph;
  }
  return {};
}

namespace {

Formula right_nested_tensor(std::vector<Formula> factors) {
  Formula acc = std::move(factors.back());
  for (std::size_t i = factors.size() - 1; i-- > 0;)
    acc = Formula::tensor(std::move(factors[i]), std::move(acc));
  return acc;
}

struct CanonicalLevel {
  Decomposition decomposition;
  Formula formula = Formula::unit();
};

CanonicalLevel canonical_level(const RawGraph &g, const CliqueTree &tree,
                               std::size_t level) {
  struct Rendered {
    DecompositionPart part;
    Formula formula;
    std::string text;
  };
  std::vector<Rendered> parts;
  for (std::size_t ci : tree.levels[level].cliques) {
    const CliqueEntry &clique = tree.cliques[ci];
    CanonicalLevel sub = canonical_level(g, tree, clique.assumptions);

    std::vector<LabelId> labels;
    for (const auto &v : clique.members)
      labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    std::vector<Formula> atoms;
    for (auto &l : labels)
      atoms.push_back(Formula::atom(std::move(l)));
    Formula conclusion = right_nested_tensor(std::move(atoms));

    Formula part = sub.decomposition.parts.empty()
                       ? std::move(conclusion)
                       : Formula::lolli(std::move(sub.formula), std::move(conclusion));
    std::string text = print(part);
    parts.push_back({DecompositionPart{clique.members, std::move(sub.decomposition)},
                     std::move(part), std::move(text)});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Rendered &a, const Rendered &b) { return a.text < b.text; });

  CanonicalLevel out;
  if (parts.empty())
    return out;
  std::vector<Formula> factors;
  for (auto &p : parts) {
    out.decomposition.parts.push_back(std::move(p.part));
    factors.push_back(std::move(p.formula));
  }
  out.formula = right_nested_tensor(std::move(factors));
  return out;
}

} // namespace

Decomposition decompose(const LogicalGraph &g) {
  return canonical_level(g, clique_tree(g), 0).decomposition;
}

Formula to_formula(const LogicalGraph &g) {
  return canonical_level(g, clique_tree(g), 0).formula;
}

Formula normalize(const Formula &f) {
  RawGraph g = to_graph(f);
  LogicalGraph valid;
  try {
    valid = validate(g);
  } catch (const Error &e) {
    throw Error(ErrorKind::NotInFragment,
                print(f) + " has no well-formed graph: " + e.what(), e.witness());
  }
  return to_formula(valid);
}

std::string canonical_key(const LogicalGraph &g) { return print(to_formula(g)); }

} // namespace lgraph
