#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtc {

/// Malformed input: bad graph text, unknown labels, invalid generator params.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  /// 1-based line of the offending input, 0 when not tied to a line.
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// An operation was called outside its precondition (e.g. wtn of a
/// disconnected graph, clique path of a non-chordal graph).
class contract_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A brute-force search would exceed its configured budget.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wtc
