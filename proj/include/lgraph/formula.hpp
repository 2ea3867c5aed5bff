#ifndef LGRAPH_FORMULA_HPP
#define LGRAPH_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "lgraph/names.hpp"

namespace lgraph {

/// Immutable MILL formula: 1, an atom, A * B (tensor) or A -o B (lollipop).
/// Subtrees are shared between copies.
class Formula {
public:
  enum class Kind { Unit, Atom, Tensor, Lolli };

  static Formula unit();
  static Formula atom(LabelId l);
  static Formula tensor(Formula a, Formula b);
  static Formula lolli(Formula a, Formula b);

  Kind kind() const noexcept { return node_->kind; }
  bool is_unit() const noexcept { return kind() == Kind::Unit; }
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_tensor() const noexcept { return kind() == Kind::Tensor; }
  bool is_lolli() const noexcept { return kind() == Kind::Lolli; }

  /// Atoms only.
  const LabelId &label() const noexcept { return node_->label; }
  /// Tensor and Lolli only.
  Formula lhs() const noexcept { return Formula(node_->lhs); }
  Formula rhs() const noexcept { return Formula(node_->rhs); }

  /// Number of Tensor/Lolli nodes.
  std::size_t connectives() const noexcept { return node_->connectives; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Formula &a, const Formula &b) noexcept;
  friend std::strong_ordering operator<=>(const Formula &a, const Formula &b) noexcept;

private:
  struct Node {
    Kind kind;
    LabelId label;
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t connectives = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(Kind k, Formula a, Formula b);

  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest first:
///   formula := tensor ("-o" formula)?       right associative
///   tensor  := primary ("*" primary)*       left associative
///   primary := "1" | ident | "(" formula ")"
///   ident   := [A-Za-z][A-Za-z0-9_]*
/// Throws SyntaxError.
Formula parse(std::string_view text);

/// Minimal parentheses under the grammar above; parse(print(f)) == f.
std::string print(const Formula &f);

} // namespace lgraph

template <>
struct std::hash<lgraph::Formula> {
  std::size_t operator()(const lgraph::Formula &f) const noexcept { return f.hash(); }
};

#endif
