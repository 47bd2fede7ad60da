#include "transcalc/error.hpp"

namespace transcalc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::IndeterminateSign: return "IndeterminateSign";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::NegativeLeading: return "NegativeLeading";
    case Errc::CoeffNotRepresentable: return "CoeffNotRepresentable";
    case Errc::ConstantTermNotRepresentable: return "ConstantTermNotRepresentable";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotPositivelyInfinite: return "NotPositivelyInfinite";
    case Errc::NoConvergenceWithinBudget: return "NoConvergenceWithinBudget";
    case Errc::UndefinedLogDerivative: return "UndefinedLogDerivative";
    case Errc::NonConstantRequired: return "NonConstantRequired";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotFoundWithinBounds: return "NotFoundWithinBounds";
    case Errc::ZeroHasNoDominantTerm: return "ZeroHasNoDominantTerm";
    case Errc::UndefinedOnZero: return "UndefinedOnZero";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::GammaPrimeUndefinedAtZero: return "GammaPrimeUndefinedAtZero";
    case Errc::InexactLargePart: return "InexactLargePart";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownFunction: return "UnknownFunction";
    case Errc::ArityError: return "ArityError";
    case Errc::TypeError: return "TypeError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg, int pos)
    : std::runtime_error(msg), code_(code), pos_(pos) {}

void fail(Errc code, const std::string& msg, int pos) {
  throw Error(code, msg, pos);
}

}  // namespace transcalc
