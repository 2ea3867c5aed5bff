#ifndef LGRAPH_ERROR_HPP
#define LGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgraph/names.hpp"

namespace lgraph {

enum class ErrorKind {
  UnknownVertex,
  DanglingEdge,
  CyclicEdges,
  NotWellFormed,
  NotASubgraphByName,
  SyntaxError,
  NotInFragment,
  BoundsTooLarge,
  InvalidGraphFile,
  Io,
  Usage,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// The one exception type thrown by the library. `witness` carries the
/// vertices that explain the failure (a cycle, an overlap, ...), if any.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message,
        std::vector<VertexId> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<VertexId> &witness() const noexcept { return witness_; }

private:
  ErrorKind kind_;
  std::vector<VertexId> witness_;
};

/// Thrown by the formula parser; `position` is a 0-based byte offset.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::string expected)
      : Error(ErrorKind::SyntaxError,
              "at position " + std::to_string(position) + ": expected " +
                  expected),
        position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string &expected() const noexcept { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

} // namespace lgraph

#endif
