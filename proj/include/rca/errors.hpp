#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rca {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input value: out-of-range index, non-lattice order, non-equivalence, ...
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The operation's hypothesis does not hold for this input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Term evaluation failed (unbound variable).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Ill-typed formula, structure or sequent.
class TypeError : public Error {
 public:
  using Error::Error;
};

struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(format(span, message)), span_(std::move(span)), message_(message) {}

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(const SourceSpan& s, const std::string& m) {
    return (s.file.empty() ? std::string("<input>") : s.file) + ":" + std::to_string(s.line) + ":" +
           std::to_string(s.column) + ": " + m;
  }

  SourceSpan span_;
  std::string message_;
};

}  // namespace rca
