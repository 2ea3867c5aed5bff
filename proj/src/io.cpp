#include "lgraph/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lgraph {

namespace {

std::string quoted(const std::string &s) { return nlohmann::json(s).dump(); }

[[noreturn]] void bad_file(const std::string &why) {
  throw Error(ErrorKind::InvalidGraphFile, why);
}

} // namespace

std::string write_graph(const RawGraph &g, const std::optional<std::string> &formula) {
  std::string out = "{\n  \"vertices\": {";
  const auto &lab = g.labelling();
  for (std::size_t i = 0; i < lab.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    " + quoted(lab[i].first.str()) + ": " + quoted(lab[i].second.str());
  }
  out += lab.empty() ? "},\n" : "\n  },\n";

  out += "  \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    [" + quoted(edges[i].src.str()) + ", " + quoted(edges[i].dst.str()) + "]";
  }
  out += edges.empty() ? "]" : "\n  ]";

  if (formula)
    out += ",\n  \"formula\": " + quoted(*formula);
  out += "\n}\n";
  return out;
}

RawGraph read_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    bad_file(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    bad_file("top level must be an object");
  for (const auto &[key, value] : doc.items())
    if (key != "vertices" && key != "edges" && key != "formula")
      bad_file("unexpected member \"" + key + "\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_object())
    bad_file("\"vertices\" must be an object");

  RawGraph::Labelling lab;
  for (const auto &[name, label] : doc["vertices"].items()) {
    if (!label.is_string())
      bad_file("label of vertex \"" + name + "\" must be a string");
    lab.emplace_back(VertexId(name), LabelId(label.get<std::string>()));
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      bad_file("\"edges\" must be an array");
    for (const auto &e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        bad_file("each edge must be a [source, target] pair of strings");
      edges.push_back({VertexId(e[0].get<std::string>()), VertexId(e[1].get<std::string>())});
    }
  }
  return RawGraph(std::move(lab), std::move(edges));
}

RawGraph load_graph(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph(buf.str());
}

void save_graph(const std::string &path, const RawGraph &g,
                const std::optional<std::string> &formula) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::Io, "cannot write " + path);
  out << write_graph(g, formula);
  if (!out)
    throw Error(ErrorKind::Io, "cannot write " + path);
}

std::string write_dot(const RawGraph &g) {
  std::string out = "digraph G {\n";
  for (const auto &[v, l] : g.labelling())
    out += "  " + quoted(v.str()) + " [label=" + quoted(l.str()) + "];\n";
  for (const auto &e : g.edges())
    out += "  " + quoted(e.src.str()) + " -> " + quoted(e.dst.str()) + ";\n";
  out += "}\n";
  return out;
}

} // namespace lgraph
