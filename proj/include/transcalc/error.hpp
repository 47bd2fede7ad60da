#pragma once

#include <stdexcept>
#include <string>

namespace transcalc {

/// Stable error codes. The CLI prints these names verbatim in diagnostics.
enum class Errc {
  DivisionByZero,
  IndeterminateSign,
  LimitExceeded,
  NegativeLeading,
  CoeffNotRepresentable,
  ConstantTermNotRepresentable,
  NotPositive,
  NotPositivelyInfinite,
  NoConvergenceWithinBudget,
  UndefinedLogDerivative,
  NonConstantRequired,
  NoStabilization,
  NotHomogeneous,
  NotFoundWithinBounds,
  ZeroHasNoDominantTerm,
  UndefinedOnZero,
  ZeroArgument,
  GammaPrimeUndefinedAtZero,
  InexactLargePart,
  SyntaxError,
  UnknownFunction,
  ArityError,
  TypeError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, int pos = -1);

  Errc code() const { return code_; }
  /// Byte offset into the source line for parser errors, -1 otherwise.
  int position() const { return pos_; }

 private:
  Errc code_;
  int pos_;
};

[[noreturn]] void fail(Errc code, const std::string& msg, int pos = -1);

}  // namespace transcalc
