#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed JSON, invalid presentations, broken tables.
struct ValidationError : Error {
  using Error::Error;
};

// Parse failure in a textual format; offset is a byte position in the input.
struct ParseError : ValidationError {
  ParseError(const std::string& what, std::size_t byte_offset)
      : ValidationError(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  std::size_t offset;
};

struct IoError : Error {
  using Error::Error;
};

// Violated operation precondition on otherwise well-formed input.
struct PreconditionError : Error {
  using Error::Error;
};

struct EmptyPosetError : PreconditionError {
  EmptyPosetError() : PreconditionError("poset is empty") {}
};

struct DisconnectedError : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct IndexNotSimplyConnectedError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// An effort budget ran out before the computation could settle the question.
struct BudgetError : Error {
  using Error::Error;
};

struct MissingEdgeHomError : ValidationError {
  using ValidationError::ValidationError;
};

struct NotAHomomorphismError : ValidationError {
  NotAHomomorphismError(const std::string& what, std::string offending_relator)
      : ValidationError(what), relator(std::move(offending_relator)) {}
  std::string relator;
};

struct UnknownChainKeyError : ValidationError {
  using ValidationError::ValidationError;
};

struct TooLargeError : ValidationError {
  using ValidationError::ValidationError;
};

struct PrimeNotDividingError : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace strat
