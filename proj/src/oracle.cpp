#include "lgraph/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "lgraph/error.hpp"

namespace lgraph::oracle {

std::vector<VMap> naive_iso(const RawGraph &g1, const RawGraph &g2) {
  if (g1.vertex_count() > max_naive_vertices || g2.vertex_count() > max_naive_vertices)
    throw Error(ErrorKind::BoundsTooLarge,
                "naive_iso is limited to " + std::to_string(max_naive_vertices) +
                    " vertices");
  if (g1.vertex_count() != g2.vertex_count())
    return {};

  const std::size_t n = g1.vertex_count();
  const auto &lab1 = g1.labelling();
  const auto &lab2 = g2.labelling();
  std::array<const LabelId *, max_naive_vertices> ls1{}, ls2{};
  for (std::size_t i = 0; i < n; ++i) {
    ls1[i] = &lab1[i].second;
    ls2[i] = &lab2[i].second;
  }
  auto by_label = [](const LabelId *a, const LabelId *b) { return *a < *b; };
  std::sort(ls1.begin(), ls1.begin() + n, by_label);
  std::sort(ls2.begin(), ls2.begin() + n, by_label);
  if (!std::equal(ls1.begin(), ls1.begin() + n, ls2.begin(),
                  [](const LabelId *a, const LabelId *b) { return *a == *b; }))
    return {};
  auto index_of = [](const RawGraph::Labelling &lab, const VertexId &v) {
    std::size_t i = 0;
    while (lab[i].first != v)
      ++i;
    return i;
  };
  std::array<char, max_naive_vertices * max_naive_vertices> adj1{}, adj2{}, compatible{};
  for (const auto &e : g1.edges())
    adj1[index_of(lab1, e.src) * n + index_of(lab1, e.dst)] = 1;
  for (const auto &e : g2.edges())
    adj2[index_of(lab2, e.src) * n + index_of(lab2, e.dst)] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      compatible[i * n + j] = lab1[i].second == lab2[j].second;

  // Plain backtracking over label-compatible assignments; a partial
  // assignment is dropped as soon as an edge among assigned vertices differs.
  std::array<std::size_t, max_naive_vertices> perm{};
  std::array<char, max_naive_vertices> used{};
  std::vector<VMap> out;
  auto consistent = [&](std::size_t i) {
    for (std::size_t a = 0; a <= i; ++a)
      if (adj1[a * n + i] != adj2[perm[a] * n + perm[i]] ||
          adj1[i * n + a] != adj2[perm[i] * n + perm[a]])
        return false;
    return true;
  };
  auto assign = [&](auto &self, std::size_t i) -> void {
    if (i == n) {
      VMap m;
      for (std::size_t a = 0; a < n; ++a)
        m.emplace(lab1[a].first, lab2[perm[a]].first);
      out.push_back(std::move(m));
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !compatible[i * n + j])
        continue;
      used[j] = 1;
      perm[i] = j;
      if (consistent(i))
        self(self, i + 1);
      used[j] = 0;
    }
  };
  assign(assign, 0);
  return out;
}

std::vector<Formula> enumerate_formulas(const std::vector<LabelId> &atoms,
                                        std::size_t max_connectives) {
  std::vector<LabelId> distinct;
  for (const auto &a : atoms)
    if (std::find(distinct.begin(), distinct.end(), a) == distinct.end())
      distinct.push_back(a);
  if (max_connectives > max_enumeration_connectives ||
      distinct.size() > max_enumeration_atoms)
    throw Error(ErrorKind::BoundsTooLarge,
                "enumeration is limited to " +
                    std::to_string(max_enumeration_connectives) +
                    " connectives over " + std::to_string(max_enumeration_atoms) +
                    " atoms");

  std::vector<std::vector<Formula>> by_size(max_connectives + 1);
  by_size[0].push_back(Formula::unit());
  for (const auto &a : distinct)
    by_size[0].push_back(Formula::atom(a));
  for (std::size_t n = 1; n <= max_connectives; ++n)
    for (auto make : {&Formula::tensor, &Formula::lolli})
      for (std::size_t k = 0; k < n; ++k)
        for (const auto &a : by_size[k])
          for (const auto &b : by_size[n - 1 - k])
            by_size[n].push_back(make(a, b));

  std::vector<Formula> out;
  for (auto &level : by_size)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Formula> rewrite_neighbours(const Formula &f) {
  std::vector<Formula> out;
  const Formula one = Formula::unit();

  if (f.is_tensor()) {
    Formula a = f.lhs(), b = f.rhs();
    out.push_back(Formula::tensor(b, a));
    if (a.is_tensor())
      out.push_back(Formula::tensor(a.lhs(), Formula::tensor(a.rhs(), b)));
    if (b.is_tensor())
      out.push_back(Formula::tensor(Formula::tensor(a, b.lhs()), b.rhs()));
    if (a.is_unit())
      out.push_back(b);
    if (b.is_unit())
      out.push_back(a);
  }
  if (f.is_lolli()) {
    Formula a = f.lhs(), b = f.rhs();
    if (a.is_tensor())
      out.push_back(Formula::lolli(a.lhs(), Formula::lolli(a.rhs(), b)));
    if (b.is_lolli())
      out.push_back(Formula::lolli(Formula::tensor(a, b.lhs()), b.rhs()));
    if (a.is_unit())
      out.push_back(b);
  }
  out.push_back(Formula::tensor(one, f));
  out.push_back(Formula::tensor(f, one));
  out.push_back(Formula::lolli(one, f));

  if (f.is_tensor() || f.is_lolli()) {
    auto rebuild = f.is_tensor() ? &Formula::tensor : &Formula::lolli;
    Formula a = f.lhs(), b = f.rhs();
    for (auto &x : rewrite_neighbours(a))
      out.push_back(rebuild(std::move(x), b));
    for (auto &y : rewrite_neighbours(b))
      out.push_back(rebuild(a, std::move(y)));
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), f), out.end());
  return out;
}

std::set<Formula> rewrite_variants(const Formula &f, std::size_t depth) {
  if (depth > max_rewrite_depth)
    throw Error(ErrorKind::BoundsTooLarge,
                "rewrite depth is limited to " + std::to_string(max_rewrite_depth));
  std::set<Formula> seen{f};
  std::vector<Formula> frontier{f};
  for (std::size_t round = 0; round < depth && !frontier.empty(); ++round) {
    std::vector<Formula> next;
    for (const auto &x : frontier)
      for (auto &y : rewrite_neighbours(x))
        if (seen.insert(y).second)
          next.push_back(std::move(y));
    frontier = std::move(next);
  }
  return seen;
}

} // namespace lgraph::oracle
