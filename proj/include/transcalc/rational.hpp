#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace transcalc {

/// Exact rational coefficient. Always kept in lowest terms with a
/// positive denominator; no floating point anywhere in the kernel.
///
/// The rest of the kernel reaches coefficients only through this alias,
/// the field operators, and the helpers below, so swapping in another
/// exact ordered coefficient field means reimplementing this one surface.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

bool rat_is_integer(const Rat& r);
long rat_to_long(const Rat& r);

int rat_sign(const Rat& r);

Rat rat_pow_int(const Rat& base, long e);

/// Exact d-th root when it exists in Q, nullopt otherwise.
std::optional<Rat> rat_nth_root(const Rat& r, unsigned long d);

/// Exact base^e for rational e, when representable in Q.
std::optional<Rat> rat_pow(const Rat& base, const Rat& e);

/// Generalized binomial coefficient r*(r-1)*...*(r-k+1)/k!.
Rat rat_binom(const Rat& r, unsigned long k);

Rat rat_factorial(unsigned long n);

/// True when the numerator fits a machine long (integer r assumed).
bool rat_fits_long(const Rat& r);

std::string rat_str(const Rat& r);
std::string rat_num_str(const Rat& r);
std::string rat_den_str(const Rat& r);

}  // namespace transcalc
