#ifndef TORI_ERROR_HPP
#define TORI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tori {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  DivisionByZero,
  NotAUnit,
  PrecisionExhausted,
  DomainMismatch,
  ComposeNonzeroConstant,
  ConstantTermNotUnit,
  ZeroSeries,
  SingularPoint,
  PointNotOnCurve,
  PoleOnDisc,
  ZeroFunction,
  HypothesisViolated,
  ZeroColumn,
  ReducibleH,
  DegenerateDerivatives,
  ZeroVector,
  NonradicalSystem,
  DependentFunctions,
  BoundsTooSmall,
  NonUnitValue,
  BadReduction,
  InvalidInput,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tori

#endif  // TORI_ERROR_HPP
