#ifndef STIELTJES_ERRORS_HPP
#define STIELTJES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stieltjes {

/// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series or quadrature exhausted its work budget before meeting tolerance.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Working precision too small to absorb the cancellation of an alternating sum.
class PrecisionTooLow : public std::runtime_error {
 public:
  explicit PrecisionTooLow(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed symbolic input (e.g. a polynomial with an invalid key).
class MalformedInput : public std::invalid_argument {
 public:
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace stieltjes

#endif  // STIELTJES_ERRORS_HPP
