#pragma once

#include <stdexcept>
#include <string>

namespace lramsey {

// Argument outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kColorOutOfRange,
  kRaggedRows,
  kMissingHeader,
  kLiteralOutOfRange,
  kClauseCountMismatch,
  kUnterminatedClause,
  kBadToken,
  kSolverOutput,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Inconsistent symmetry strategies or solver settings.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup past the end of an embedded table.
class OutOfTableError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A solver model that does not describe a coloring (zero or several colors in a cell).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver claimed SAT but its decoded grid contains a monochromatic L.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search gave up at its node budget.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lramsey
