#pragma once

#include <stdexcept>
#include <string>

namespace rook {

// Thrown when an exhaustive oracle or solver is asked for more work than its
// small-case guard allows. These guards fail loudly instead of grinding.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: board files, deck specs. `line()` is 1-based and
// 0 when no source line applies.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace rook
