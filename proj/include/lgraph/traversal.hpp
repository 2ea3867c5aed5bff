#ifndef LGRAPH_TRAVERSAL_HPP
#define LGRAPH_TRAVERSAL_HPP

#include <concepts>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lgraph/graph.hpp"

namespace lgraph {

enum class Action { Skip, Stop, Continue };

template <class F, class Acc>
concept VisitFn = requires(F f, const VertexId &v, Acc a) {
  { f(v, std::move(a)) } -> std::convertible_to<std::pair<Action, Acc>>;
};

/// Depth-first fold backwards along edges, starting at v.
///
/// f is applied to a vertex and the accumulator. On Continue the fold descends
/// into the predecessors in ascending name order, threading the accumulator
/// left to right; on Skip the predecessors are not visited; on Stop the whole
/// traversal returns at once. Vertices reachable along several paths are
/// visited once per path, so on cyclic graphs f is responsible for
/// terminating.
///
/// The recursion is run on an explicit stack, so long chains are fine.
template <class Acc, VisitFn<Acc> F>
Acc traverse_dfs(F &&f, const RawGraph &g, const VertexId &v, Acc a0) {
  if (!g.contains(v))
    throw Error(ErrorKind::UnknownVertex, "unknown vertex " + v.str(), {v});

  struct Frame {
    std::span<const Edge>::iterator next, end;
  };
  boost::container::small_vector<Frame, 16> stack;
  Acc acc = std::move(a0);

  // Returns false when the traversal must stop.
  auto visit = [&](const VertexId &x) {
    auto [action, next] = f(x, std::move(acc));
    acc = std::move(next);
    switch (action) {
    case Action::Stop:
      return false;
    case Action::Skip:
      return true;
    case Action::Continue: {
      auto in = g.in_edges(x);
      if (!in.empty())
        stack.push_back({in.begin(), in.end()});
      return true;
    }
    }
    return true;
  };

  if (!visit(v))
    return acc;
  while (!stack.empty()) {
    Frame &top = stack.back();
    if (top.next == top.end) {
      stack.pop_back();
      continue;
    }
    // visit() may grow the stack, invalidating `top`.
    const VertexId &w = top.next->src;
    ++top.next;
    if (!visit(w))
      return acc;
  }
  return acc;
}

/// Applies f exactly once to every vertex of the up-closure of v, in first-visit
/// depth-first order. Terminates on cyclic graphs too.
template <class Acc, class F>
  requires std::invocable<F &, const VertexId &, Acc> &&
           std::convertible_to<std::invoke_result_t<F &, const VertexId &, Acc>, Acc>
Acc fold_reachable(F &&f, const RawGraph &g, const VertexId &v, Acc a0) {
  struct State {
    std::unordered_set<VertexId> seen;
    Acc acc;
  };
  auto step = [&f](const VertexId &x, State s) -> std::pair<Action, State> {
    if (!s.seen.insert(x).second)
      return {Action::Skip, std::move(s)};
    s.acc = f(x, std::move(s.acc));
    return {Action::Continue, std::move(s)};
  };
  State out = traverse_dfs(step, g, v, State{{}, std::move(a0)});
  return std::move(out.acc);
}

} // namespace lgraph

#endif
