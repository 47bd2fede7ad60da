#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/testgen.hpp"
#include "transcalc/asymcouple.hpp"

using namespace transcalc;
using namespace transcalc::testing;

namespace {
const Context ctx;
}

TEST_CASE("gamma_data on the sample elements") {
  GammaData d = gamma_data(series_x(ctx), ctx);
  CHECK(d.gamma == GammaElt{mono_ell(0, ctx)});
  CHECK(gamma_is_zero(d.prime));
  CHECK(d.dagger == GammaElt{mono_x_pow(Rat(-1), ctx)});

  d = gamma_data(S("exp(x)", ctx), ctx);
  CHECK(d.prime == d.gamma);
  CHECK(gamma_is_zero(d.dagger));

  d = gamma_data(S("log(x)", ctx), ctx);
  CHECK(d.prime == GammaElt{mono_x_pow(Rat(-1), ctx)});
  CHECK(d.dagger ==
        GammaElt{make_monomial({Rat(-1), Rat(-1)}, nullptr, ctx)});

  CHECK_THROWS_AS((void)gamma_data(series_zero(), ctx), Error);
  CHECK_THROWS_AS((void)gamma_data(series_const(Rat(2)), ctx), Error);
}

TEST_CASE("asymptotic integration leading term") {
  CHECK(fmt(asy_int_leading(S("1/x", ctx), ctx)) == "log(x)");
  CHECK(fmt(asy_int_leading(series_const(Rat(1)), ctx)) == "x");
  CHECK(fmt(asy_int_leading(S("exp(x)", ctx), ctx)) == "exp(x)");
  CHECK_THROWS_AS((void)asy_int_leading(series_zero(), ctx), Error);
  // y' ~ a on random nonzero samples
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    Series a = random_nonzero(rng, ctx);
    Series y = asy_int_leading(a, ctx);
    AsyResult r = asy_compare(derive(y, ctx), a, ctx);
    CHECK(r.rel == Cmp::Equal);
    CHECK(r.similar);
  }
}

TEST_CASE("value-group comparisons reverse the monomial order") {
  GammaElt gx{mono_ell(0, ctx)};
  GammaElt g1 = gamma_zero();
  CHECK(gamma_cmp(gx, g1, ctx) == Cmp::Less);  // v(x) < v(1)
  CHECK(gamma_cmp(gamma_neg(gx, ctx), g1, ctx) == Cmp::Greater);
  CHECK(gamma_add(gx, gamma_neg(gx, ctx), ctx) == gamma_zero());
}

TEST_CASE("psi axioms on random value-group samples") {
  Rng rng(99);
  int done = 0;
  while (done < 200) {
    GammaElt a{random_monomial(rng, ctx)};
    GammaElt b{random_monomial(rng, ctx)};
    if (gamma_is_zero(a) || gamma_is_zero(b)) continue;
    ++done;
    // (ii) symmetry
    CHECK(gamma_dagger(gamma_neg(a, ctx), ctx) == gamma_dagger(a, ctx));
    // (i) valuation property, with 0-dagger = infinity
    GammaElt s = gamma_add(a, b, ctx);
    if (!gamma_is_zero(s)) {
      GammaElt ds = gamma_dagger(s, ctx);
      GammaElt da = gamma_dagger(a, ctx);
      GammaElt db = gamma_dagger(b, ctx);
      GammaElt m = gamma_cmp(da, db, ctx) == Cmp::Less ? da : db;
      CHECK(gamma_cmp(ds, m, ctx) != Cmp::Less);
    }
  }
}

TEST_CASE("psi is decreasing and obeys the Rosenlicht bound on positives") {
  Rng rng(7);
  int done = 0;
  while (done < 200) {
    GammaElt a{random_monomial(rng, ctx)};
    GammaElt b{random_monomial(rng, ctx)};
    if (gamma_is_zero(a) || gamma_is_zero(b)) continue;
    // force positive: v(m) > 0 iff m < 1
    if (mono_cmp(a.mono, mono_one(), ctx) == Cmp::Greater)
      a = gamma_neg(a, ctx);
    if (mono_cmp(b.mono, mono_one(), ctx) == Cmp::Greater)
      b = gamma_neg(b, ctx);
    ++done;
    if (gamma_cmp(a, b, ctx) == Cmp::Greater) std::swap(a, b);
    // (H): 0 < a <= b implies a-dagger >= b-dagger
    CHECK(gamma_cmp(gamma_dagger(a, ctx), gamma_dagger(b, ctx), ctx) !=
          Cmp::Less);
    // footnote axiom: psi(a) < b + psi(b)
    CHECK(gamma_cmp(gamma_dagger(a, ctx),
                    gamma_add(b, gamma_dagger(b, ctx), ctx), ctx) ==
          Cmp::Less);
  }
}
