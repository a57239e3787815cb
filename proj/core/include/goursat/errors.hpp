#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace goursat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical / grammatical problem in an input expression. `position` is a
// 0-based byte offset into the source text.
struct ParseError : Error {
  ParseError(std::size_t pos, const std::string& msg)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct UnknownIdentifierError : ParseError {
  UnknownIdentifierError(std::size_t pos, const std::string& ident)
      : ParseError(pos, "unknown identifier '" + ident + "'"), name(ident) {}
  std::string name;
};

struct NonIntegerExponentError : ParseError {
  explicit NonIntegerExponentError(std::size_t pos)
      : ParseError(pos, "exponent must be an integer constant") {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by an identically zero expression") {}
};

// Numeric evaluation hit a kernel singularity or a vanishing denominator.
struct SingularPointError : Error {
  explicit SingularPointError(const std::string& subexpr)
      : Error("singular point in sub-expression: " + subexpr), subexpression(subexpr) {}
  std::string subexpression;
};

// The numeric rank proposal could not be confirmed symbolically after the
// configured number of resampling attempts.
struct RankConfirmationError : Error {
  using Error::Error;
};

// A constant-rank hypothesis failed at a specific stage of the flag.
struct NotTotallyRegularError : Error {
  NotTotallyRegularError(int lvl, const std::string& stage)
      : Error("constant-rank hypothesis failed at derived level " + std::to_string(lvl) +
              " (" + stage + ")"),
        level(lvl), stage(stage) {}
  int level;
  std::string stage;
};

struct DimensionMismatchError : Error {
  DimensionMismatchError(const std::string& where, int expected, int actual)
      : Error("dimension mismatch in " + where + ": expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)),
        where(where), expected(expected), actual(actual) {}
  std::string where;
  int expected;
  int actual;
};

// The first-integral strategy cascade ran out of ideas. Carries a printable
// description of the residual bundle so the caller can supply hints.
struct IntegralsNotFoundError : Error {
  IntegralsNotFoundError(const std::string& what, std::vector<std::string> residual)
      : Error(what), residual_bundle(std::move(residual)) {}
  std::vector<std::string> residual_bundle;
};

// Malformed problem file or command-line usage.
struct InputError : Error {
  using Error::Error;
};

}  // namespace goursat
