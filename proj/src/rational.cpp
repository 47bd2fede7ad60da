#include "transcalc/rational.hpp"

#include <stdexcept>

namespace transcalc {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

long rat_to_long(const Rat& r) {
  if (!rat_is_integer(r) || !r.get_num().fits_slong_p())
    throw std::invalid_argument("rational is not a small integer");
  return r.get_num().get_si();
}

int rat_sign(const Rat& r) { return sgn(r); }

Rat rat_pow_int(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::invalid_argument("0^negative");
    return Rat(0);
  }
  Rat b = e < 0 ? Rat(1) / base : base;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  Rat acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

std::optional<Rat> rat_nth_root(const Rat& r, unsigned long d) {
  if (d == 0) return std::nullopt;
  if (d == 1) return r;
  if (r < 0) return std::nullopt;
  if (r == 0) return Rat(0);
  mpz_class num_root, den_root;
  if (!mpz_root(num_root.get_mpz_t(), r.get_num().get_mpz_t(), d))
    return std::nullopt;
  if (!mpz_root(den_root.get_mpz_t(), r.get_den().get_mpz_t(), d))
    return std::nullopt;
  Rat out(num_root, den_root);
  out.canonicalize();
  return out;
}

std::optional<Rat> rat_pow(const Rat& base, const Rat& e) {
  if (!e.get_num().fits_slong_p() || !e.get_den().fits_ulong_p())
    return std::nullopt;
  long p = e.get_num().get_si();
  unsigned long q = e.get_den().get_ui();
  auto root = rat_nth_root(base, q);
  if (!root) return std::nullopt;
  if (*root == 0 && p < 0) return std::nullopt;
  return rat_pow_int(*root, p);
}

Rat rat_binom(const Rat& r, unsigned long k) {
  Rat acc(1);
  for (unsigned long j = 0; j < k; ++j) {
    acc *= r - Rat(static_cast<long>(j));
    acc /= Rat(static_cast<long>(j) + 1);
  }
  return acc;
}

Rat rat_factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

bool rat_fits_long(const Rat& r) { return r.get_num().fits_slong_p(); }

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string rat_num_str(const Rat& r) { return r.get_num().get_str(); }

std::string rat_den_str(const Rat& r) { return r.get_den().get_str(); }

}  // namespace transcalc
