#ifndef POSBASIS_ERRORS_HPP
#define POSBASIS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posbasis {

// Base for all domain-level failures. The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomialError : DomainError {
  ZeroPolynomialError() : DomainError("zero polynomial") {}
};

struct EmptySetError : DomainError {
  EmptySetError() : DomainError("empty set") {}
};

struct BadIntervalError : DomainError {
  explicit BadIntervalError(const std::string& what) : DomainError(what) {}
};

struct IndexOutOfRangeError : DomainError {
  explicit IndexOutOfRangeError(const std::string& what) : DomainError(what) {}
};

struct NodeNotInSetError : DomainError {
  explicit NodeNotInSetError(const std::string& what) : DomainError(what) {}
};

struct LengthMismatchError : DomainError {
  explicit LengthMismatchError(const std::string& what) : DomainError(what) {}
};

struct TooManyNodesError : DomainError {
  explicit TooManyNodesError(const std::string& what) : DomainError(what) {}
};

struct BadVariantParityError : DomainError {
  explicit BadVariantParityError(const std::string& what) : DomainError(what) {}
};

struct DegreeTooLowError : DomainError {
  explicit DegreeTooLowError(const std::string& what) : DomainError(what) {}
};

struct NotAdmissibleError : DomainError {
  explicit NotAdmissibleError(const std::string& what) : DomainError(what) {}
};

struct FiniteSetError : DomainError {
  explicit FiniteSetError(const std::string& what) : DomainError(what) {}
};

struct TooLargeError : DomainError {
  explicit TooLargeError(const std::string& what) : DomainError(what) {}
};

// Text-grammar failures carry the offending position. CLI exit code 2.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace posbasis

#endif
