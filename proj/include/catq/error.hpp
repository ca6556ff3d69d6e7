#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catq {

// Base class for all engine errors. Specific kinds carry witness data as
// preformatted strings naming the offending objects/morphisms.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// A single law violation found while validating raw data.
struct Violation {
  std::string kind;     // e.g. "AssociativityViolation"
  std::string witness;  // offending object/morphism identifiers
  std::string detail;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string what, std::vector<Violation> violations)
      : Error(std::move(what)), violations(std::move(violations)) {}
  std::vector<Violation> violations;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownMorphism : public Error {
 public:
  using Error::Error;
};

class NotUniversal : public Error {
 public:
  NotUniversal(std::string what, std::vector<std::string> witnesses)
      : Error(std::move(what)), witnesses(std::move(witnesses)) {}
  std::vector<std::string> witnesses;
};

class NotReflective : public NotUniversal {
 public:
  using NotUniversal::NotUniversal;
};

class NotCoreflective : public NotUniversal {
 public:
  using NotUniversal::NotUniversal;
};

class NotAdjoint : public Error {
 public:
  NotAdjoint(std::string what, std::string witness)
      : Error(std::move(what)), witness(std::move(witness)) {}
  std::string witness;
};

class NotAPartialOrder : public Error {
 public:
  NotAPartialOrder(std::string what, std::string witness)
      : Error(std::move(what)), witness(std::move(witness)) {}
  std::string witness;
};

class NotATopology : public Error {
 public:
  NotATopology(std::string what, std::string witness)
      : Error(std::move(what)), witness(std::move(witness)) {}
  std::string witness;
};

class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

// A theorem-guaranteed biconditional disagreed: the engine itself is wrong.
// This must never be caught and downgraded.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace catq
