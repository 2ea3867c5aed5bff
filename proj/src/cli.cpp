#include "lgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lgraph/algebra.hpp"
#include "lgraph/io.hpp"
#include "lgraph/iso.hpp"
#include "lgraph/mill.hpp"
#include "lgraph/oracle.hpp"

namespace lgraph::cli {

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Inline text, or the contents of a file when written `@path`.
std::string argument_text(const std::string &arg) {
  return arg.starts_with("@") ? read_file(arg.substr(1)) : arg;
}

Formula formula_arg(const std::string &arg) { return parse(argument_text(arg)); }

/// `@path` naming a graph file gives that graph; anything else is a formula.
RawGraph graph_or_formula_arg(const std::string &arg) {
  std::string text = argument_text(arg);
  auto first = text.find_first_not_of(" \t\r\n");
  if (arg.starts_with("@") && first != std::string::npos && text[first] == '{')
    return read_graph(text);
  return to_graph(parse(text));
}

std::string show_map(const VMap &m) {
  std::string out;
  for (const auto &[from, to] : m) {
    if (!out.empty())
      out += ' ';
    out += from.str() + "->" + to.str();
  }
  return out;
}

void emit_graph(std::ostream &out, const std::string &target, const RawGraph &g,
                const std::optional<std::string> &formula = std::nullopt) {
  if (target.empty())
    out << write_graph(g, formula);
  else
    save_graph(target, g, formula);
}

std::vector<LabelId> split_atoms(const std::string &csv) {
  std::vector<LabelId> atoms;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      atoms.emplace_back(item);
  return atoms;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Logical graphs for multiplicative intuitionistic linear logic", "lg"};
  app.require_subcommand(1);

  std::string arg1, arg2, output;
  bool count = false, all = false, classes = false;
  std::string atoms = "p,q";
  std::size_t max_connectives = 3;
  int exit_code = 0;

  auto *c_parse = app.add_subcommand("parse", "Parse a formula and print it back");
  c_parse->add_option("formula", arg1)->required();

  auto *c_to_graph = app.add_subcommand("to-graph", "Translate a formula to a graph file");
  c_to_graph->add_option("formula", arg1)->required();
  c_to_graph->add_option("-o,--output", output, "Write to this file instead of stdout");

  auto *c_to_formula = app.add_subcommand("to-formula", "Read a graph file back as a formula");
  c_to_formula->add_option("graph", arg1)->required();

  auto *c_normalize = app.add_subcommand("normalize", "Print the canonical form of a formula");
  c_normalize->add_option("formula", arg1)->required();

  auto *c_equiv = app.add_subcommand("equiv", "Are two formulas or @graph files alpha-equivalent?");
  c_equiv->add_option("a", arg1)->required();
  c_equiv->add_option("b", arg2)->required();

  auto *c_iso = app.add_subcommand("iso", "Find vertex alpha-equivalences between two graph files");
  c_iso->add_option("g1", arg1)->required();
  c_iso->add_option("g2", arg2)->required();
  auto *f_count = c_iso->add_flag("--count", count, "Print how many there are");
  auto *f_all = c_iso->add_flag("--all", all, "Print all of them");
  f_count->excludes(f_all);

  auto *c_check = app.add_subcommand("check", "Validate a graph file");
  c_check->add_option("graph", arg1)->required();

  std::map<std::string, CLI::App *> binary_ops;
  for (const char *name : {"add", "implies", "subtract"}) {
    auto *c = app.add_subcommand(name, std::string("Graph ") + name);
    c->add_option("g1", arg1)->required();
    c->add_option("g2", arg2)->required();
    c->add_option("-o,--output", output, "Write to this file instead of stdout");
    binary_ops[name] = c;
  }

  auto *c_conclusions = app.add_subcommand("conclusions", "List the conclusions of a graph file");
  c_conclusions->add_option("graph", arg1)->required();

  auto *c_dot = app.add_subcommand("dot", "Export a graph file as Graphviz");
  c_dot->add_option("graph", arg1)->required();

  auto *c_enumerate = app.add_subcommand("enumerate", "Enumerate small formulas");
  c_enumerate->add_option("--atoms", atoms, "Comma-separated atoms")->capture_default_str();
  c_enumerate->add_option("--max-connectives", max_connectives)->capture_default_str();
  c_enumerate->add_flag("--classes", classes, "Group by canonical form");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error:" << to_string(ErrorKind::Usage) << ":" << e.what() << "\n";
    return 2;
  }

  try {
    if (c_parse->parsed()) {
      out << print(formula_arg(arg1)) << "\n";
    } else if (c_to_graph->parsed()) {
      Formula f = formula_arg(arg1);
      emit_graph(out, output, to_graph(f), print(f));
    } else if (c_to_formula->parsed()) {
      out << print(to_formula(validate(load_graph(arg1)))) << "\n";
    } else if (c_normalize->parsed()) {
      out << print(normalize(formula_arg(arg1))) << "\n";
    } else if (c_equiv->parsed()) {
      bool same = alpha_equiv(graph_or_formula_arg(arg1), graph_or_formula_arg(arg2)).has_value();
      out << (same ? "equivalent" : "not equivalent") << "\n";
      exit_code = same ? 0 : 1;
    } else if (c_iso->parsed()) {
      RawGraph g1 = load_graph(arg1), g2 = load_graph(arg2);
      if (count || all) {
        auto maps = all_isomorphisms(g1, g2);
        if (count)
          out << maps.size() << "\n";
        else
          for (const auto &m : maps)
            out << show_map(m) << "\n";
        exit_code = maps.empty() ? 1 : 0;
      } else if (auto m = alpha_equiv(g1, g2)) {
        out << show_map(*m) << "\n";
      } else {
        out << "not isomorphic\n";
        exit_code = 1;
      }
    } else if (c_check->parsed()) {
      RawGraph g = load_graph(arg1);
      try {
        validate(g);
        out << "ok\n";
      } catch (const Error &e) {
        if (e.kind() != ErrorKind::CyclicEdges && e.kind() != ErrorKind::NotWellFormed)
          throw;
        out << "invalid:" << to_string(e.kind()) << ":" << e.what() << "\n";
        exit_code = 1;
      }
    } else if (c_conclusions->parsed()) {
      for (const auto &v : conclusions(validate(load_graph(arg1))))
        out << v << "\n";
    } else if (c_dot->parsed()) {
      out << write_dot(load_graph(arg1));
    } else if (c_enumerate->parsed()) {
      auto formulas = oracle::enumerate_formulas(split_atoms(atoms), max_connectives);
      if (!classes) {
        for (const auto &f : formulas)
          out << print(f) << "\n";
      } else {
        std::map<std::string, std::vector<std::string>> groups;
        std::vector<std::string> outside;
        for (const auto &f : formulas) {
          try {
            groups[print(normalize(f))].push_back(print(f));
          } catch (const Error &e) {
            if (e.kind() != ErrorKind::NotInFragment)
              throw;
            outside.push_back(print(f));
          }
        }
        for (const auto &[key, members] : groups) {
          out << key << "\n";
          for (const auto &m : members)
            out << "  " << m << "\n";
        }
        if (!outside.empty()) {
          out << "(not in fragment)\n";
          for (const auto &m : outside)
            out << "  " << m << "\n";
        }
      }
    } else {
      for (const auto &[name, cmd] : binary_ops) {
        if (!cmd->parsed())
          continue;
        RawGraph g1 = load_graph(arg1), g2 = load_graph(arg2);
        RawGraph result = name == "add"       ? add(g1, g2).graph
                          : name == "implies" ? implies(g1, g2).graph
                                              : subtract(g1, g2);
        emit_graph(out, output, result);
      }
    }
  } catch (const Error &e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error:" << to_string(e.kind()) << ":" << msg << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error:Internal:" << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

} // namespace lgraph::cli
