#ifndef HYPVOL_ERRORS_HPP
#define HYPVOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypvol {

// Argument outside the mathematical domain of an operation (beyond the
// configured clamp width).  The message names the violated precondition.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Adaptive quadrature exhausted its subdivision budget before meeting the
// requested tolerance.  Never silently downgraded to a value.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

// solve_bracketed was handed endpoints without a sign change.
class bracket_error : public std::runtime_error {
public:
  explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal geometric invariant failed by more than rounding allows.
class consistency_error : public std::logic_error {
public:
  explicit consistency_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace hypvol

#endif
