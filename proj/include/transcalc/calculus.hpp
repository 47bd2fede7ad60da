#pragma once

#include "transcalc/series.hpp"

namespace transcalc {

/// Termwise derivation. Exact on exact inputs; a tail O(t) maps to
/// O(dominant monomial of t').
Series derive(const Series& f, const Context& ctx);

/// f'/f for nonzero f.
Series logderiv(const Series& f, const Context& ctx);

/// Antiderivative with zero constant term. Chain monomials
/// (l_0...l_k)^-1 integrate to l_{k+1}; every other term goes through
/// the dominant-term asymptotic-integration ansatz on successive
/// remainders, emitting terms up to the budget.
Series integrate(const Series& f, const Context& ctx);

/// The small integration operator: the unique infinitesimal
/// antiderivative when y lies in I(T), and 0 otherwise.
Series small_int(const Series& y, const Context& ctx);

/// exp of a series whose constant part is zero (e^c is not rational for
/// nonzero rational c). The purely large part becomes an exp factor,
/// with c*l_i arguments folded into log exponents.
Series exp(const Series& f, const Context& ctx);

/// Inverse of exp on positive series with dominant coefficient 1.
Series log(const Series& f, const Context& ctx);

/// Substitution of g for x in f; g must be positive infinite.
Series compose(const Series& f, const Series& g, const Context& ctx);

/// Compositional inverse: h with g(h(x)) = h(g(x)) = x on listed terms,
/// found by a Newton iteration under composition from a dominant-term
/// inverse, each step validated by a compose-check.
Series inverse_comp(const Series& g, const Context& ctx);

/// A solution of y' + a y = b via the integrating factor exp(integral a).
Series solve_linear1(const Series& a, const Series& b, const Context& ctx);

/// One term (monomial, coeff) whose derivative is asymptotic to c*m.
Term integrate_term(const Rat& c, const Monomial& m, const Context& ctx);

/// Monomial of integrate_term(1, m); used for antiderivative tail bounds.
Monomial antiderivative_monomial(const Monomial& m, const Context& ctx);

}  // namespace transcalc
