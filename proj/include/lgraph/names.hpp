#ifndef LGRAPH_NAMES_HPP
#define LGRAPH_NAMES_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/container/flat_map.hpp>
#include <boost/container/flat_set.hpp>

namespace lgraph {

/// A nonempty textual name, ordered lexicographically. The tag keeps vertex
/// names and label names from being mixed up.
template <class Tag>
class Name {
public:
  Name() = default;
  explicit Name(std::string text) : text_(std::move(text)) {}
  explicit Name(std::string_view text) : text_(text) {}
  explicit Name(const char *text) : text_(text) {}

  const std::string &str() const noexcept { return text_; }
  bool empty() const noexcept { return text_.empty(); }

  friend auto operator<=>(const Name &, const Name &) = default;
  friend bool operator==(const Name &, const Name &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Name &n) {
    return os << n.text_;
  }

private:
  std::string text_;
};

struct VertexTag;
struct LabelTag;

using VertexId = Name<VertexTag>;
using LabelId = Name<LabelTag>;

using VSet = boost::container::flat_set<VertexId>;

/// Finite injective vertex renaming (candidate isomorphism).
using VMap = boost::container::flat_map<VertexId, VertexId>;

inline VertexId operator""_v(const char *s, std::size_t n) {
  return VertexId(std::string_view(s, n));
}
inline LabelId operator""_l(const char *s, std::size_t n) {
  return LabelId(std::string_view(s, n));
}

} // namespace lgraph

template <class Tag>
struct std::hash<lgraph::Name<Tag>> {
  std::size_t operator()(const lgraph::Name<Tag> &n) const noexcept {
    return std::hash<std::string>{}(n.str());
  }
};

#endif
