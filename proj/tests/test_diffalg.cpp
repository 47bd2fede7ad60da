#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/testgen.hpp"
#include "transcalc/diffalg.hpp"

using namespace transcalc;
using namespace transcalc::testing;

namespace {
const Context ctx;

// 2Y'Y''' - 3(Y'')^2, the classical example polynomial.
DiffPoly example_n() {
  DiffPoly a = dp_mul(dp_indeterminate(1), dp_indeterminate(3), ctx);
  DiffPoly b = dp_mul(dp_indeterminate(2), dp_indeterminate(2), ctx);
  return dp_sub(dp_scale(a, series_const(Rat(2)), ctx),
                dp_scale(b, series_const(Rat(3)), ctx), ctx);
}
}  // namespace

TEST_CASE("dp_eval substitutes derivatives") {
  DiffPoly p = example_n();
  CHECK(fmt(dp_eval(p, S("x^2", ctx), ctx)) == "-12");
  CHECK(dp_eval(p, series_x(ctx), ctx).is_zero());
  Series f = S("x + exp(-x)", ctx);
  CHECK(dp_eval(dp_indeterminate(0), f, ctx) == f);
}

TEST_CASE("logarithmic decomposition") {
  // Y'' = Y (Y<1>)^2 + Y Y<1> Y<2>
  LogDecomposition d2 = log_decompose(dp_indeterminate(2), ctx);
  REQUIRE(d2.coeffs.size() == 2);
  CHECK(d2.coeffs.count(MultiIndex{1, 2}) == 1);
  CHECK(d2.coeffs.count(MultiIndex{1, 1, 1}) == 1);
  CHECK(fmt(d2.coeffs.at(MultiIndex{1, 2})) == "1");
  CHECK(fmt(d2.coeffs.at(MultiIndex{1, 1, 1})) == "1");

  LogDecomposition d1 = log_decompose(dp_indeterminate(1), ctx);
  REQUIRE(d1.coeffs.size() == 1);
  CHECK(d1.coeffs.count(MultiIndex{1, 1}) == 1);

  LogDecomposition d0 = log_decompose(dp_indeterminate(0), ctx);
  REQUIRE(d0.coeffs.size() == 1);
  CHECK(d0.coeffs.count(MultiIndex{1}) == 1);

  // evaluation oracle at y = x^2 and y = x^3
  for (const char* y : {"x^2", "x^3"}) {
    Series yv = S(y, ctx);
    CHECK(listed_equal(dp_eval(dp_indeterminate(2), yv, ctx),
                       logdec_eval(d2, yv, ctx), ctx));
  }
}

TEST_CASE("iterated logarithmic derivatives") {
  CHECK(fmt(eval_logmono(series_x(ctx), 1, ctx)) == "x^-1");
  CHECK(eval_logmono(series_x(ctx), 0, ctx) == series_x(ctx));
  Series ex = S("exp(x)", ctx);
  CHECK(fmt(eval_logmono(ex, 1, ctx)) == "1");
  CHECK(eval_logmono(ex, 2, ctx).is_zero());
  CHECK_THROWS_AS((void)eval_logmono(ex, 3, ctx), Error);
}

TEST_CASE("compositional conjugation") {
  Series phi = series_x(ctx);
  DiffPoly yp = comp_conjugate(dp_indeterminate(1), phi, ctx);
  REQUIRE(yp.coeffs.size() == 1);
  CHECK(yp.coeffs.at(MultiIndex{0, 1}) == phi);

  DiffPoly ypp = comp_conjugate(dp_indeterminate(2), phi, ctx);
  REQUIRE(ypp.coeffs.size() == 2);
  CHECK(ypp.coeffs.at(MultiIndex{0, 0, 1}) == S("x^2", ctx));
  CHECK(ypp.coeffs.at(MultiIndex{0, 1}) == series_const(Rat(1)));

  // P^1 = P
  DiffPoly p = example_n();
  CHECK(comp_conjugate(p, series_const(Rat(1)), ctx) == p);

  // identity-check oracle at y = x^3, phi = x
  Series y = S("x^3", ctx);
  CHECK(listed_equal(dp_eval(dp_indeterminate(2), y, ctx),
                     dp_eval_delta(ypp, y, phi, ctx), ctx));
  CHECK_THROWS_AS((void)comp_conjugate(p, series_zero(), ctx), Error);
}

TEST_CASE("newton polynomials of the basic pair") {
  DiffPoly p = dp_sub(dp_indeterminate(1), dp_indeterminate(0), ctx);
  NewtonPoly n = newton_poly(p, ctx);
  REQUIRE(n.coeffs.size() == 1);
  CHECK(n.coeffs.count(MultiIndex{1}) == 1);
  CHECK(n.coeffs.at(MultiIndex{1}) == 1);

  n = newton_poly(dp_indeterminate(0), ctx);
  REQUIRE(n.coeffs.size() == 1);
  CHECK(n.coeffs.count(MultiIndex{1}) == 1);

  n = newton_poly(dp_indeterminate(2), ctx);
  REQUIRE(n.coeffs.size() == 1);
  CHECK(n.coeffs.count(MultiIndex{0, 1}) == 1);
  CHECK(n.coeffs.at(MultiIndex{0, 1}) == 1);

  CHECK(newton_is_simple_shape(n));
  CHECK_THROWS_AS((void)newton_poly(dp_zero(), ctx), Error);
}

TEST_CASE("valuation function on monomials") {
  DiffPoly y = dp_indeterminate(0);
  DiffPoly yp = dp_indeterminate(1);
  DiffPoly y2 = dp_mul(y, y, ctx);
  Rng rng(3);
  Monomial g = random_monomial(rng, ctx);  // any monomial works
  CHECK(vP_eval(y, g, ctx) == GammaElt{g});
  CHECK(vP_eval(y2, g, ctx) == GammaElt{mono_pow(g, Rat(2), ctx)});
  // v_{Y'}(v x) = v(x x-dagger) = v(1)
  CHECK(gamma_is_zero(vP_eval(yp, mono_ell(0, ctx), ctx)));
}

TEST_CASE("equalizer search") {
  DiffPoly y = dp_indeterminate(0);
  DiffPoly yp = dp_indeterminate(1);
  DiffPoly y2 = dp_mul(y, y, ctx);
  DiffPoly y3 = dp_mul(y2, y, ctx);
  EqualizeBounds bounds;

  CHECK(equalize(y2, y, bounds, ctx).is_one());
  CHECK(equalize(y3, y, bounds, ctx).is_one());
  Monomial g = equalize(y2, yp, bounds, ctx);
  CHECK(g == mono_x_pow(Rat(-1), ctx));
  // both sides evaluate to v(x^-2)
  CHECK(vP_eval(y2, g, ctx) == GammaElt{mono_x_pow(Rat(-2), ctx)});
  CHECK(vP_eval(yp, g, ctx) == GammaElt{mono_x_pow(Rat(-2), ctx)});

  CHECK_THROWS_AS((void)equalize(dp_add(y2, y, ctx), y, bounds, ctx), Error);
  CHECK_THROWS_AS((void)equalize(y2, y2, bounds, ctx), Error);
}

TEST_CASE("linear differential operators") {
  // d * x = x d + 1
  LinOp d = linop_make({series_zero(), series_const(Rat(1))});
  LinOp x_op = linop_make({series_x(ctx)});
  LinOp prod = linop_mul(d, x_op, ctx);
  REQUIRE(prod.coeffs.size() == 2);
  CHECK(fmt(prod.coeffs[0]) == "1");
  CHECK(fmt(prod.coeffs[1]) == "x");
  // apply both sides to y = x^2 and x^3
  for (const char* ys : {"x^2", "x^3"}) {
    Series yv = S(ys, ctx);
    CHECK(linop_apply(prod, yv, ctx) ==
          linop_apply(d, linop_apply(x_op, yv, ctx), ctx));
  }

  // (d - 1)(d + 1) = d^2 - 1
  LinOp dm1 = linop_make({series_const(Rat(-1)), series_const(Rat(1))});
  LinOp dp1 = linop_make({series_const(Rat(1)), series_const(Rat(1))});
  LinOp sq = linop_mul(dm1, dp1, ctx);
  REQUIRE(sq.coeffs.size() == 3);
  CHECK(fmt(sq.coeffs[0]) == "-1");
  CHECK(sq.coeffs[1].is_zero());
  CHECK(fmt(sq.coeffs[2]) == "1");

  // apply(x d + 1, x) = 2x
  LinOp a = linop_make({series_const(Rat(1)), series_x(ctx)});
  CHECK(fmt(linop_apply(a, series_x(ctx), ctx)) == "2*x");

  // degree-1 round trip
  DiffPoly p = dp_add(dp_scale(dp_indeterminate(1), series_x(ctx), ctx),
                      dp_indeterminate(0), ctx);
  CHECK(linop_to_dp(linop_from_dp(p, ctx)) == p);
}

TEST_CASE("operator ring laws on random samples") {
  Rng rng(606);
  auto listed_op_equal = [&](const LinOp& a, const LinOp& b) {
    std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
      Series ca = k < a.coeffs.size() ? a.coeffs[k] : Series();
      Series cb = k < b.coeffs.size() ? b.coeffs[k] : Series();
      if (!listed_equal(ca, cb, ctx)) return false;
    }
    return true;
  };
  for (int i = 0; i < 40; ++i) {
    LinOp a = linop_make({random_series(rng, ctx, 2, false),
                          random_series(rng, ctx, 1, false)});
    LinOp b = linop_make({random_series(rng, ctx, 2, false),
                          random_series(rng, ctx, 1, false)});
    LinOp c = linop_make({random_series(rng, ctx, 2, false)});
    CHECK(listed_op_equal(linop_mul(linop_mul(a, b, ctx), c, ctx),
                          linop_mul(a, linop_mul(b, c, ctx), ctx)));
    Series f = random_series(rng, ctx, 2, false);
    CHECK(listed_equal(linop_apply(linop_mul(a, b, ctx), f, ctx),
                       linop_apply(a, linop_apply(b, f, ctx), ctx), ctx));
    CHECK(listed_equal(linop_apply(linop_add(a, b, ctx), f, ctx),
                       add(linop_apply(a, f, ctx), linop_apply(b, f, ctx),
                           ctx),
                       ctx));
  }
}

TEST_CASE("omega map, theta, schwarzian") {
  CHECK(omega_map(series_zero(), ctx).is_zero());
  CHECK(fmt(omega_map(S("1/x", ctx), ctx)) == "x^-2");
  CHECK(omega_map(S("lambda(0)", ctx), ctx) == S("omega(0)", ctx));
  CHECK(fmt(theta(series_x(ctx), ctx)) == "2*x^-2");
  CHECK(schwarzian(series_x(ctx), ctx).is_zero());
  CHECK(fmt(schwarzian(S("x^2", ctx), ctx)) == "-3/2*x^-2");
  // S(u) agrees with u'''/u' - (3/2)(u''/u')^2 on samples
  Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    Series u = random_large_positive(rng, ctx);
    Series up = derive(u, ctx);
    Series upp = derive(up, ctx);
    Series uppp = derive(upp, ctx);
    Series alt = sub(div(uppp, up, ctx),
                     scale(pow_rat(div(upp, up, ctx), Rat(2), ctx),
                           make_rat(3, 2)),
                     ctx);
    CHECK(listed_equal(schwarzian(u, ctx), alt, ctx));
  }
  CHECK_THROWS_AS((void)schwarzian(series_const(Rat(3)), ctx), Error);
  CHECK_THROWS_AS((void)theta(series_zero(), ctx), Error);
}

TEST_CASE("lambda and omega sequences") {
  CHECK(fmt(lambda_seq(0, ctx)) == "x^-1");
  CHECK(fmt(lambda_seq(1, ctx)) == "x^-1 + x^-1*log(x)^-1");
  CHECK(fmt(omega_seq(0, ctx)) == "x^-2");
  CHECK_THROWS_AS((void)lambda_seq(ctx.max_depth, ctx), Error);
  // lambda_n = -l_n^{dagger dagger}, omega_n = omega(lambda_n), n <= 5
  for (int n = 0; n <= 5; ++n) {
    Series ln = series_ell(n, ctx);
    CHECK(lambda_seq(n, ctx) ==
          neg(logderiv(logderiv(ln, ctx), ctx)));
    CHECK(omega_seq(n, ctx) == omega_map(lambda_seq(n, ctx), ctx));
  }
}

TEST_CASE("membership predicates") {
  CHECK(osc_criterion(S("x^-2", ctx), ctx));
  CHECK(!osc_criterion(S("x^2", ctx), ctx));
  CHECK(in_I(S("exp(-x)", ctx), ctx));
  CHECK(!in_I(S("1/x", ctx), ctx));
  CHECK(in_I(series_zero(), ctx));
  CHECK(in_Lambda(S("lambda(0)", ctx), ctx));
  CHECK(in_Lambda(series_zero(), ctx));
  CHECK(in_Lambda(neg(S("exp(x)", ctx)), ctx));
  CHECK(!in_Lambda(series_const(Rat(1)), ctx));
  // oscillation witness: 4y'' + x^-2 y = 0 at y = x^{1/2}, exactly
  Series y = S("x^1/2", ctx);
  Series lhs = add(scale(derive(derive(y, ctx), ctx), Rat(4)),
                   mul(S("x^-2", ctx), y, ctx), ctx);
  CHECK(lhs.is_zero());
}
