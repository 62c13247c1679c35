#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgeledger {

// Base class for every error raised by this library.  Each concrete type
// corresponds to one failure mode a caller may want to distinguish.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation that requires an effective (all multiplicities >= 0) input
// was handed a class with a negative entry.
struct VirtualInput : Error {
  using Error::Error;
};

// A size guard tripped (e.g. an abelian-variety dimension beyond the
// supported range).
struct DimensionGuard : Error {
  using Error::Error;
};

// An argument was structurally wrong for the requested operation
// (wrong class shape, negative count, out-of-range literal, ...).
struct BadInput : Error {
  using Error::Error;
};

// A fixture name that is not in the built-in catalogue.
struct UnknownName : Error {
  using Error::Error;
};

// A ledger fixture failed structural validation; the message names the
// invariant that failed.
struct FixtureInvalid : Error {
  using Error::Error;
};

// The ledger rank equations admit no solution; the message carries a hint
// identifying a conflicting pair of constraints.
struct Inconsistent : Error {
  using Error::Error;
};

// A difference of classes that must cancel to an effective class did not.
struct NotEffective : Error {
  using Error::Error;
};

// Serialized multiplicity outside the range representable as a JSON
// integer (in-memory arithmetic is unbounded; the wire format is not).
struct SerializationRange : Error {
  using Error::Error;
};

// --- expression language errors -------------------------------------------

// Syntax error.  `offset` is the 1-based byte position where the parse
// stopped; `expected` lists the token kinds that would have been accepted.
struct ParseError : Error {
  std::size_t offset;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, std::size_t off, std::vector<std::string> exp)
      : Error(msg), offset(off), expected(std::move(exp)) {}
};

// A known function called with the wrong number of arguments.
struct ArityError : Error {
  std::size_t offset;
  ArityError(const std::string& msg, std::size_t off) : Error(msg), offset(off) {}
};

// An identifier that is neither an atom nor a function.
struct UnknownIdentifier : Error {
  std::size_t offset;
  UnknownIdentifier(const std::string& msg, std::size_t off) : Error(msg), offset(off) {}
};

}  // namespace hodgeledger
