#include "transcalc/asymcouple.hpp"

namespace transcalc {

GammaElt gamma_zero() { return GammaElt{mono_one()}; }

bool gamma_is_zero(const GammaElt& g) { return g.mono.is_one(); }

GammaElt gamma_add(const GammaElt& a, const GammaElt& b, const Context& ctx) {
  return GammaElt{mono_mul(a.mono, b.mono, ctx)};
}

GammaElt gamma_neg(const GammaElt& a, const Context& ctx) {
  return GammaElt{mono_inverse(a.mono, ctx)};
}

Cmp gamma_cmp(const GammaElt& a, const GammaElt& b, const Context& ctx) {
  switch (mono_cmp(a.mono, b.mono, ctx)) {
    case Cmp::Greater: return Cmp::Less;
    case Cmp::Less: return Cmp::Greater;
    default: return Cmp::Equal;
  }
}

GammaElt gamma_of(const Series& f, const Context& ctx) {
  (void)ctx;
  if (f.is_zero()) fail(Errc::ZeroArgument, "v(0) is undefined");
  return GammaElt{dominant_term(f).mono};
}

GammaElt gamma_dagger(const GammaElt& g, const Context& ctx) {
  if (gamma_is_zero(g))
    fail(Errc::GammaPrimeUndefinedAtZero,
         "gamma-dagger is undefined at gamma = 0");
  Series ld = mono_logderiv(g.mono, ctx);
  return GammaElt{dominant_term(ld).mono};
}

GammaElt gamma_prime(const GammaElt& g, const Context& ctx) {
  return gamma_add(g, gamma_dagger(g, ctx), ctx);
}

GammaData gamma_data(const Series& f, const Context& ctx) {
  GammaElt g = gamma_of(f, ctx);
  if (gamma_is_zero(g))
    fail(Errc::GammaPrimeUndefinedAtZero,
         "gamma' is undefined for values in the constant class");
  GammaElt dag = gamma_dagger(g, ctx);
  return GammaData{g, gamma_add(g, dag, ctx), dag};
}

Series asy_int_leading(const Series& a, const Context& ctx) {
  if (a.is_zero())
    fail(Errc::ZeroArgument, "asymptotic integration of zero");
  Term lead = dominant_term(a);
  Term anti = integrate_term(lead.coeff, lead.mono, ctx);
  return series_monomial(anti.mono, anti.coeff);
}

}  // namespace transcalc
