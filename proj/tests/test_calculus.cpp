#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/testgen.hpp"
#include "transcalc/calculus.hpp"

using namespace transcalc;
using namespace transcalc::testing;

namespace {
const Context ctx;
}

TEST_CASE("derive: termwise differentiation") {
  CHECK(fmt(derive(S("exp(-x) + exp(-x^2)", ctx), ctx)) ==
        "-exp(-x) - 2*x*exp(-x^2)");
  CHECK(fmt(derive(S("exp(-x) + exp(-x^2) + exp(-x^3)", ctx), ctx)) ==
        "-exp(-x) - 2*x*exp(-x^2) - 3*x^2*exp(-x^3)");
  CHECK(derive(series_const(Rat(7)), ctx).is_zero());
  // oracle identity: l_{n+1}' = l_n'/l_n
  Series l2 = series_ell(2, ctx);
  CHECK(fmt(derive(l2, ctx)) == "x^-1*log(x)^-1");
  for (int n = 0; n < 4; ++n) {
    Series ln = series_ell(n, ctx);
    Series lhs = derive(series_ell(n + 1, ctx), ctx);
    Series rhs = div(derive(ln, ctx), ln, ctx);
    CHECK(listed_equal(lhs, rhs, ctx));
  }
}

TEST_CASE("logderiv") {
  CHECK(fmt(logderiv(series_x(ctx), ctx)) == "x^-1");
  CHECK(fmt(logderiv(S("exp(x)", ctx), ctx)) == "1");
  // l_n-dagger = 1/(l_0...l_n) encoded through lambda_n = -l_n-dagger-dagger
  CHECK(logderiv(S("1/(x*log(x)*log(log(x)))", ctx), ctx) ==
        neg(S("lambda(2)", ctx)));
  CHECK_THROWS_AS((void)logderiv(series_zero(), ctx), Error);
}

TEST_CASE("integrate: divergent expansion of int e^x/x") {
  Series f = S("exp(x)/x", ctx);
  Series big_f = integrate(f, ctx);
  REQUIRE(big_f.terms().size() >= 4);
  for (int n = 0; n <= 3; ++n) {
    CHECK(big_f.terms()[n].coeff == rat_factorial(n));
    CHECK(big_f.terms()[n].mono ==
          mono_mul(mono_x_pow(Rat(-1 - n), ctx),
                   make_monomial({}, std::make_shared<Series>(series_x(ctx)),
                                 ctx),
                   ctx));
  }
  CHECK(listed_equal(derive(big_f, ctx), f, ctx));
}

TEST_CASE("integrate: basics and chain monomials") {
  CHECK(fmt(integrate(series_const(Rat(1)), ctx)) == "x");
  CHECK(fmt(integrate(S("1/x", ctx), ctx)) == "log(x)");
  CHECK(fmt(integrate(S("1/(x*log(x))", ctx), ctx)) == "log(log(x))");
  CHECK(fmt(integrate(S("x^5", ctx), ctx)) == "1/6*x^6");
  CHECK(fmt(integrate(S("x^-1*log(x)^-2", ctx), ctx)) == "-log(x)^-1");
  CHECK(integrate(series_zero(), ctx).is_zero());
  // depth limit: integrating the deepest chain monomial must error
  Context small = ctx;
  small.max_depth = 1;
  CHECK_THROWS_AS((void)integrate(S("1/(x*log(x))", small), small), Error);
}

TEST_CASE("derive and integrate are mutually inverse on samples") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Series eps = random_infinitesimal(rng, ctx);
    CHECK(integrate(derive(eps, ctx), ctx) == eps);
  }
  for (int i = 0; i < 50; ++i) {
    Series f = random_nonzero(rng, ctx);
    CHECK(listed_equal(derive(integrate(f, ctx), ctx), f, ctx));
  }
}

TEST_CASE("tails flow soundly through the calculus") {
  Context c3 = ctx;
  c3.term_budget = 3;
  // derive maps O(t) to O(dominant of t'), and O(1) to O(1)
  Series f = S("1/(1-1/x)", c3);  // 1 + x^-1 + x^-2 + O(x^-3)
  REQUIRE(f.tail());
  Series df = derive(f, c3);
  REQUIRE(df.tail());
  CHECK(fmt(series_monomial(*df.tail())) == "x^-4");
  CHECK(listed_equal(df, S("-x^-2 - 2*x^-3", ctx), c3));
  // O(1) maps to O(1); the exact derivative of the x term then sits at
  // the bound itself and is absorbed
  Series with_unity_tail = make_series({Term{mono_ell(0, c3), Rat(1)}},
                                       mono_one(), c3);
  CHECK(fmt(derive(with_unity_tail, c3)) == "0 + O(1)");

  // composition maps O(t) to O(dominant of t(g))
  Series g = S("x^2", c3);
  Series fg = compose(f, g, c3);
  REQUIRE(fg.tail());
  CHECK(fmt(series_monomial(*fg.tail())) == "x^-6");

  // exp with an inexact purely large part refuses loudly
  Series big = make_series({Term{mono_ell(0, c3), Rat(1)}},
                           mono_x_pow(make_rat(1, 2), c3), c3);
  CHECK_THROWS_AS((void)exp(big, c3), Error);
  // ... but an inexact infinitesimal part is fine
  Series smallish = make_series({Term{mono_x_pow(Rat(-1), c3), Rat(1)}},
                                mono_x_pow(Rat(-2), c3), c3);
  Series es = exp(smallish, c3);
  REQUIRE(es.tail());
  CHECK(sign(es) == 1);

  // integration widens the tail to the antiderivative bound
  Series fi = integrate(f, c3);
  REQUIRE(fi.tail());
  CHECK(fmt(series_monomial(*fi.tail())) == "x^-2");
}

TEST_CASE("iterated exponentials are increasing and cofinal samples") {
  Series e1 = iterated_exp(1, ctx);
  Series e2 = iterated_exp(2, ctx);
  CHECK(fmt(e1) == "exp(x)");
  CHECK(fmt(e2) == "exp(exp(x))");
  CHECK(cmp(e2, e1, ctx) == Cmp::Greater);
  CHECK(cmp(e1, S("x^100", ctx), ctx) == Cmp::Greater);
  CHECK(listed_equal(log(e2, ctx), e1, ctx));
  // the l_n mirror them below: e_2(l_2) = x
  CHECK(compose(e2, series_ell(2, ctx), ctx) == series_x(ctx));
}

TEST_CASE("small integration operator") {
  CHECK(fmt(small_int(S("-x^-2", ctx), ctx)) == "x^-1");
  CHECK(small_int(S("1/x", ctx), ctx).is_zero());
  CHECK(small_int(series_zero(), ctx).is_zero());
}

TEST_CASE("exp: group isomorphism cases") {
  Series sinh = S("1/2*exp(x) - 1/2*exp(-x)", ctx);
  Series es = exp(sinh, ctx);
  REQUIRE(es.terms().size() >= 3);
  // sum over n of (-1)^n/(n! 2^n) exp(e^x/2 - n x)
  Series half_ex = S("1/2*exp(x)", ctx);
  for (int n = 0; n <= 2; ++n) {
    Rat expected = rat_pow_int(Rat(-1), n) / (rat_factorial(n) * rat_pow_int(Rat(2), n));
    CHECK(es.terms()[n].coeff == expected);
    Series arg = sub(half_ex, scale(series_x(ctx), Rat(n)), ctx);
    CHECK(es.terms()[n].mono ==
          make_monomial({}, std::make_shared<Series>(arg), ctx));
  }
  CHECK(fmt(exp(series_zero(), ctx)) == "1");
  CHECK(fmt(exp(S("3*log(x)", ctx), ctx)) == "x^3");
  CHECK(fmt(exp(S("x + 3*log(x)", ctx), ctx)) == "x^3*exp(x)");
  CHECK(listed_equal(log(exp(S("3*log(x)", ctx), ctx), ctx),
                     S("3*log(x)", ctx), ctx));
  CHECK_THROWS_AS((void)exp(series_const(Rat(1)), ctx), Error);
}

TEST_CASE("log: inverse of exp") {
  Series two_sinh = S("exp(x) - exp(-x)", ctx);
  Context c4 = ctx;
  c4.term_budget = 4;
  Series lg = log(S("exp(x) - exp(-x)", c4), c4);
  CHECK(fmt(lg) ==
        "x - exp(-2*x) - 1/2*exp(-4*x) - 1/3*exp(-6*x) + O(exp(-8*x))");
  // exp round trip
  CHECK(listed_equal(exp(log(two_sinh, ctx), ctx), two_sinh, ctx));
  CHECK(log(series_const(Rat(1)), ctx).is_zero());
  CHECK(fmt(log(S("x^2*exp(x)", ctx), ctx)) == "x + 2*log(x)");
  CHECK(listed_equal(exp(S("x + 2*log(x)", ctx), ctx), S("x^2*exp(x)", ctx),
                     ctx));
  CHECK_THROWS_AS((void)log(neg(series_x(ctx)), ctx), Error);
  CHECK_THROWS_AS((void)log(scale(series_x(ctx), Rat(2)), ctx), Error);
}

TEST_CASE("compose: the worked logarithmic pair") {
  Series f = S("x + log(x)", ctx);
  Series g = S("x*log(x)", ctx);
  Series fg = compose(f, g, ctx);
  CHECK(fmt(fg) == "x*log(x) + log(x) + log(log(x))");
  CHECK(fg.terms().size() == 3);
  CHECK(!fg.tail());

  Series gf = compose(g, f, ctx);
  REQUIRE(gf.terms().size() >= 5);
  // x log x + (log x)^2 + log x + sum (-1)^{n+1}/(n(n+1)) (log x)^{n+1}/x^n
  CHECK(gf.terms()[0].coeff == 1);
  CHECK(fmt(series_monomial(gf.terms()[0].mono)) == "x*log(x)");
  CHECK(gf.terms()[1].coeff == 1);
  CHECK(fmt(series_monomial(gf.terms()[1].mono)) == "log(x)^2");
  CHECK(gf.terms()[2].coeff == 1);
  CHECK(fmt(series_monomial(gf.terms()[2].mono)) == "log(x)");
  CHECK(gf.terms()[3].coeff == make_rat(1, 2));
  CHECK(fmt(series_monomial(gf.terms()[3].mono)) == "x^-1*log(x)^2");
  CHECK(gf.terms()[4].coeff == make_rat(-1, 6));
  CHECK(fmt(series_monomial(gf.terms()[4].mono)) == "x^-2*log(x)^3");

  CHECK(compose(f, series_x(ctx), ctx) == f);
  CHECK_THROWS_AS((void)compose(f, neg(series_x(ctx)), ctx), Error);
  CHECK_THROWS_AS((void)compose(f, S("x^-1", ctx), ctx), Error);
}

TEST_CASE("inverse_comp") {
  Series g = S("x*log(x)", ctx);
  Context c12 = ctx;
  c12.term_budget = 12;
  Series h = inverse_comp(S("x*log(x)", c12), c12);
  Term lead = dominant_term(h);
  CHECK(lead.coeff == 1);
  CHECK(fmt(series_monomial(lead.mono)) == "x*log(x)^-1");
  CHECK(listed_equal(compose(S("x*log(x)", c12), h, c12), series_x(c12), c12));
  CHECK(listed_equal(compose(h, S("x*log(x)", c12), c12), series_x(c12), c12));

  CHECK(inverse_comp(series_x(ctx), ctx) == series_x(ctx));
  CHECK(fmt(inverse_comp(scale(series_x(ctx), Rat(2)), ctx)) == "1/2*x");
  // conjugation special cases
  CHECK(fmt(inverse_comp(S("exp(x)", ctx), ctx)) == "log(x)");
  CHECK(fmt(inverse_comp(S("log(x)", ctx), ctx)) == "exp(x)");
  CHECK(fmt(inverse_comp(S("exp(x^2)", ctx), ctx)) == "log(x)^1/2");
  CHECK_THROWS_AS((void)inverse_comp(S("x^-1", ctx), ctx), Error);
}

TEST_CASE("solve_linear1") {
  CHECK(fmt(solve_linear1(series_zero(), series_const(Rat(1)), ctx)) == "x");
  Series y = solve_linear1(series_const(Rat(1)), series_const(Rat(1)), ctx);
  CHECK(fmt(y) == "1");
  y = solve_linear1(S("1/x", ctx), series_const(Rat(1)), ctx);
  CHECK(fmt(y) == "1/2*x");
  // residual vanishes on listed terms
  Series a = S("1/x", ctx), b = S("1 + 1/x", ctx);
  y = solve_linear1(a, b, ctx);
  Series residual = sub(add(derive(y, ctx), mul(a, y, ctx), ctx), b, ctx);
  CHECK(!residual.has_terms());
}
