#ifndef RADCRIT_ERROR_HPP
#define RADCRIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace radcrit {

// Base of every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands of different degree were combined.
struct DegreeMismatch : Error {
  using Error::Error;
};

// Malformed text: cycle notation, group specs, group files.
struct ParseError : Error {
  using Error::Error;
};

// An argument violates the operation's precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// A group file's claimed order disagrees with the computed order.
struct OrderMismatch : Error {
  using Error::Error;
};

// Full element enumeration was requested for a group above the element cap.
struct CapExceeded : Error {
  using Error::Error;
};

// An exhaustive search would exceed its configured tuple budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace radcrit

#endif  // RADCRIT_ERROR_HPP
