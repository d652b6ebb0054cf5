#ifndef EQHILB_ERRORS_HPP
#define EQHILB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqhilb {

// Caller passed something malformed or inconsistent (mismatched variable
// sets, unknown symbols, colliding alphabets, out-of-window indices).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text could not be parsed (polynomials, binomials, selectors).
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Exact arithmetic failed: division by zero, inexact division, a series
// that cannot be expanded at the origin.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public ArithmeticError {
 public:
  SingularMatrixError(std::size_t stage)
      : ArithmeticError("singular matrix: no nonzero pivot at elimination stage " +
                        std::to_string(stage)),
        stage_(stage) {}

  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

}  // namespace eqhilb

#endif  // EQHILB_ERRORS_HPP
