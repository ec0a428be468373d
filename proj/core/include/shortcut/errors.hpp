#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shortcut {

using VertexId = std::uint32_t;

// Every failure raised by the library derives from Error so callers can
// catch one type and still dispatch on the concrete kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

class CycleNotInGraph : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class CycleTooLong : public Error {
 public:
  CycleTooLong(std::size_t length, std::size_t limit)
      : Error("cycle of length " + std::to_string(length) +
              " exceeds the filling range N = " + std::to_string(limit)) {}
};

// Raised when the disk-diagram construction meets a cycle with
// theta < |C| <= N that admits no violating pair. The witness is the
// offending cycle in host-graph vertex ids.
class PropertyAViolated : public Error {
 public:
  explicit PropertyAViolated(std::vector<VertexId> witness)
      : Error("filling parameters do not hold for this graph: found an "
              "almost isometric cycle of length " +
              std::to_string(witness.size())),
        witness_(std::move(witness)) {}

  const std::vector<VertexId>& witness() const noexcept { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::string what, std::size_t completed = 0)
      : Error(std::move(what)), completed_(completed) {}

  // For ball generation: the last radius that was fully generated.
  std::size_t completed() const noexcept { return completed_; }

 private:
  std::size_t completed_;
};

class UnknownWall : public Error {
 public:
  using Error::Error;
};

class NotCubical : public Error {
 public:
  using Error::Error;
};

class RadiusInsufficient : public Error {
 public:
  RadiusInsufficient(std::string element, std::size_t radius)
      : Error("element " + element + " lies outside the generated ball of radius " +
              std::to_string(radius)),
        element_(std::move(element)),
        radius_(radius) {}

  const std::string& element() const noexcept { return element_; }
  std::size_t radius() const noexcept { return radius_; }

 private:
  std::string element_;
  std::size_t radius_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace shortcut
