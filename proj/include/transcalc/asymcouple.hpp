#pragma once

#include "transcalc/calculus.hpp"
#include "transcalc/series.hpp"

namespace transcalc {

/// Element gamma = v(m) of the value group, carried by a concrete
/// monomial. The order is the reverse of the monomial order:
/// v(f) >= v(g) iff f is dominated by g.
struct GammaElt {
  Monomial mono;

  bool operator==(const GammaElt& other) const { return mono == other.mono; }
};

GammaElt gamma_zero();
bool gamma_is_zero(const GammaElt& g);
GammaElt gamma_add(const GammaElt& a, const GammaElt& b, const Context& ctx);
GammaElt gamma_neg(const GammaElt& a, const Context& ctx);
Cmp gamma_cmp(const GammaElt& a, const GammaElt& b, const Context& ctx);

/// v(f) for nonzero f: the valuation of its dominant monomial.
GammaElt gamma_of(const Series& f, const Context& ctx);

/// gamma' = v(a') for v(a) = gamma != 0.
GammaElt gamma_prime(const GammaElt& g, const Context& ctx);

/// gamma-dagger = gamma' - gamma = v(a'/a), gamma != 0.
GammaElt gamma_dagger(const GammaElt& g, const Context& ctx);

struct GammaData {
  GammaElt gamma;
  GammaElt prime;
  GammaElt dagger;
};

/// (v f, v f', v f-dagger) read off the dominant monomial of f.
GammaData gamma_data(const Series& f, const Context& ctx);

/// One step of asymptotic integration: a term y with y' ~ a.
Series asy_int_leading(const Series& a, const Context& ctx);

}  // namespace transcalc
