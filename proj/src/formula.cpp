#include "lgraph/formula.hpp"

#include <cctype>

#include "lgraph/error.hpp"

namespace lgraph {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::unit() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Unit, {}, {}, {}, 0, 0x51});
  return Formula(node);
}

Formula Formula::atom(LabelId l) {
  std::size_t h = mix(0xa7, std::hash<LabelId>{}(l));
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(l), {}, {}, 0, h}));
}

Formula Formula::binary(Kind k, Formula a, Formula b) {
  std::size_t h = mix(mix(static_cast<std::size_t>(k), a.hash()), b.hash());
  std::size_t n = 1 + a.connectives() + b.connectives();
  return Formula(std::make_shared<const Node>(
      Node{k, {}, std::move(a.node_), std::move(b.node_), n, h}));
}

Formula Formula::tensor(Formula a, Formula b) {
  return binary(Kind::Tensor, std::move(a), std::move(b));
}

Formula Formula::lolli(Formula a, Formula b) {
  return binary(Kind::Lolli, std::move(a), std::move(b));
}

bool operator==(const Formula &a, const Formula &b) noexcept {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula &a, const Formula &b) noexcept {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  switch (a.kind()) {
  case Formula::Kind::Unit:
    return std::strong_ordering::equal;
  case Formula::Kind::Atom:
    return a.label() <=> b.label();
  default:
    if (auto c = a.lhs() <=> b.lhs(); c != 0)
      return c;
    return a.rhs() <=> b.rhs();
  }
}

// --- parser --------------------------------------------------------------

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = formula();
    skip_space();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, "'*', '-o' or end of input");
    return f;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) != tok)
      return false;
    pos_ += tok.size();
    return true;
  }

  Formula formula() {
    Formula lhs = tensor();
    if (accept("-o"))
      return Formula::lolli(std::move(lhs), formula());
    return lhs;
  }

  Formula tensor() {
    Formula acc = primary();
    while (accept("*"))
      acc = Formula::tensor(std::move(acc), primary());
    return acc;
  }

  Formula primary() {
    skip_space();
    if (pos_ == text_.size())
      throw SyntaxError(pos_, "'1', an atom or '('");
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Formula::unit();
    }
    if (c == '(') {
      ++pos_;
      Formula inner = formula();
      if (!accept(")"))
        throw SyntaxError(pos_, "')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Formula::atom(LabelId(text_.substr(start, pos_ - start)));
    }
    throw SyntaxError(pos_, "'1', an atom or '('");
  }
};

void render(const Formula &f, std::string &out) {
  switch (f.kind()) {
  case Formula::Kind::Unit:
    out += '1';
    return;
  case Formula::Kind::Atom:
    out += f.label().str();
    return;
  case Formula::Kind::Tensor: {
    Formula l = f.lhs(), r = f.rhs();
    bool wrap_l = l.is_lolli();
    bool wrap_r = !r.is_unit() && !r.is_atom();
    if (wrap_l) out += '(';
    render(l, out);
    if (wrap_l) out += ')';
    out += " * ";
    if (wrap_r) out += '(';
    render(r, out);
    if (wrap_r) out += ')';
    return;
  }
  case Formula::Kind::Lolli: {
    Formula l = f.lhs();
    bool wrap_l = l.is_lolli();
    if (wrap_l) out += '(';
    render(l, out);
    if (wrap_l) out += ')';
    out += " -o ";
    render(f.rhs(), out);
    return;
  }
  }
}

} // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula &f) {
  std::string out;
  render(f, out);
  return out;
}

} // namespace lgraph
