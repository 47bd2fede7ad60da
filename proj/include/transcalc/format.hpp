#pragma once

#include <string>

#include "transcalc/asymcouple.hpp"
#include "transcalc/diffalg.hpp"
#include "transcalc/series.hpp"

namespace transcalc {

enum class EmitMode { Text, Latex, Json };

/// Text mode round-trips through the parser for tail-free values; json
/// mode is byte-stable for equal inputs.
std::string format_series(const Series& f, EmitMode mode);

std::string format_monomial(const Monomial& m, EmitMode mode);
std::string format_rat(const Rat& r);

std::string format_dp(const DiffPoly& p);
std::string format_newton(const NewtonPoly& n);
std::string format_gamma(const GammaElt& g);

}  // namespace transcalc
