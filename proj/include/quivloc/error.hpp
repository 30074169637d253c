#ifndef QUIVLOC_ERROR_HPP
#define QUIVLOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quivloc {

/// Raised when an input violates a mathematical precondition (wrong shape,
/// non-normalized stability, loops where acyclicity is required, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input: quiver documents, polynomials, tuples.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Seeing one of these means a bug or
/// a mathematical anomaly worth reporting, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quivloc

#endif  // QUIVLOC_ERROR_HPP
