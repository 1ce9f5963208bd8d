#ifndef FOXWRIGHT_ERRORS_HPP
#define FOXWRIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fw {

// Thrown when a series fails to meet its stopping rule within max_terms.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown by the job-file parser; carries the 1-based line of the offence.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace fw

#endif  // FOXWRIGHT_ERRORS_HPP
