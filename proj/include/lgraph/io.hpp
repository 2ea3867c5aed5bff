#ifndef LGRAPH_IO_HPP
#define LGRAPH_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "lgraph/graph.hpp"

namespace lgraph {

/// Canonical graph file text:
///
///   {
///     "vertices": {
///       "v0": "p",
///       "v1": "q"
///     },
///     "edges": [
///       ["v0", "v1"]
///     ]
///   }
///
/// Vertices ascending, edges ascending by (src, dst), trailing newline. An
/// optional "formula" member records where the graph came from.
std::string write_graph(const RawGraph &g,
                        const std::optional<std::string> &formula = std::nullopt);

/// Accepts members and edges in any order; "formula" is ignored.
/// Throws InvalidGraphFile or DanglingEdge.
RawGraph read_graph(std::string_view text);

/// Throws Io when the file cannot be read.
RawGraph load_graph(const std::string &path);
void save_graph(const std::string &path, const RawGraph &g,
                const std::optional<std::string> &formula = std::nullopt);

/// Graphviz digraph: one `"name" [label="l"];` line per vertex, then one
/// `"src" -> "dst";` line per edge, both in canonical order.
std::string write_dot(const RawGraph &g);

} // namespace lgraph

#endif
