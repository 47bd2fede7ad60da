#pragma once

#include <map>
#include <vector>

#include "transcalc/asymcouple.hpp"
#include "transcalc/calculus.hpp"
#include "transcalc/series.hpp"

namespace transcalc {

/// Exponents (i_0,...,i_r) of Y, Y', ..., Y^(r); trailing zeros trimmed.
using MultiIndex = std::vector<unsigned>;

unsigned mi_degree(const MultiIndex& i);
MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);

/// Differential polynomial in K{Y} = K[Y, Y', Y'', ...] with Transseries
/// coefficients keyed by multi-index. Stored coefficients are nonzero.
struct DiffPoly {
  std::map<MultiIndex, Series> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int order() const;

  bool operator==(const DiffPoly& other) const = default;
};

DiffPoly dp_make(std::map<MultiIndex, Series> coeffs);
DiffPoly dp_zero();
DiffPoly dp_const(Series a);
DiffPoly dp_indeterminate(int k = 0);  // Y^(k)

DiffPoly dp_add(const DiffPoly& a, const DiffPoly& b, const Context& ctx);
DiffPoly dp_sub(const DiffPoly& a, const DiffPoly& b, const Context& ctx);
DiffPoly dp_neg(const DiffPoly& a);
DiffPoly dp_mul(const DiffPoly& a, const DiffPoly& b, const Context& ctx);
DiffPoly dp_scale(const DiffPoly& a, const Series& c, const Context& ctx);
DiffPoly dp_pow(const DiffPoly& a, unsigned n, const Context& ctx);

/// Total derivative in K{Y}: coefficients differentiate, Y^(k) bumps.
DiffPoly dp_derive(const DiffPoly& a, const Context& ctx);

Series dp_eval(const DiffPoly& P, const Series& y, const Context& ctx);

/// True iff every multi-index has total degree d (nonzero P).
bool dp_homogeneous(const DiffPoly& P, unsigned& degree_out);
int dp_depth(const DiffPoly& P);

// --- logarithmic decomposition ---

/// P rewritten in the iterated logarithmic derivatives Y<0>, Y<1>, ...
/// with Y' = Y*Y<1> and (Y<n>)' = Y<n>*Y<n+1>.
struct LogDecomposition {
  std::map<MultiIndex, Series> coeffs;  // exponents of Y<0>, Y<1>, ...

  bool operator==(const LogDecomposition& other) const = default;
};

LogDecomposition log_decompose(const DiffPoly& P, const Context& ctx);

/// y<n>: the n-th iterated logarithmic derivative of y.
Series eval_logmono(const Series& y, int n, const Context& ctx);

/// Sum of P_<i> * y^<i>; defined whenever the needed y<n> exist.
Series logdec_eval(const LogDecomposition& dec, const Series& y,
                   const Context& ctx);

// --- compositional conjugation ---

/// P rewritten for the derivation phi^-1 * d, with P_phi(y) = P(y).
/// The multi-indices of the result refer to the delta-derivatives.
DiffPoly comp_conjugate(const DiffPoly& P, const Series& phi,
                        const Context& ctx);

/// Evaluation of a conjugated polynomial: substitutes the
/// delta-derivatives (phi^-1 d)^k y. Used to check the conjugation
/// identity dp_eval(P, y) == dp_eval_delta(comp_conjugate(P, phi), y, phi).
Series dp_eval_delta(const DiffPoly& P, const Series& y, const Series& phi,
                     const Context& ctx);

// --- Newton polynomials ---

/// Element of C{Y} with exact rational coefficients, normalized so the
/// lexicographically maximal multi-index has coefficient 1.
struct NewtonPoly {
  std::map<MultiIndex, Rat> coeffs;

  bool operator==(const NewtonPoly& other) const = default;
};

/// Stabilized Newton polynomial along the admissible family
/// phi_n = 1/(l_0...l_n); two consecutive agreements required, capped at
/// n = depth(P) + 4.
NewtonPoly newton_poly(const DiffPoly& P, const Context& ctx);

/// Shape c_0 + c_1 Y + ... + c_m Y^m times (Y')^n?
bool newton_is_simple_shape(const NewtonPoly& n);

// --- valuation function and equalizer ---

/// v of P(g*Y): the valuation of P evaluated at the monomial g.
GammaElt vP_eval(const DiffPoly& P, const Monomial& g, const Context& ctx);

struct EqualizeBounds {
  int max_log_index = 1;        // search monomials over l_0..l_D
  long numer_span = 8;          // exponents j/denominator with |j| <= span
  unsigned long denominator = 2;
};

/// The unique monomial g with vP_eval(P,g) = vP_eval(Q,g), searched on a
/// bounded lattice; P, Q homogeneous of distinct degrees. The theorem
/// guarantees existence in the full value group, not in the searched
/// sub-lattice, so NotFoundWithinBounds is a legitimate outcome.
Monomial equalize(const DiffPoly& P, const DiffPoly& Q,
                  const EqualizeBounds& bounds, const Context& ctx);

// --- linear differential operators ---

/// a_0 + a_1 d + ... + a_n d^n with composition product and the twist
/// d a = a d + a'.
struct LinOp {
  std::vector<Series> coeffs;  // coeffs[i] multiplies d^i

  bool is_zero() const { return coeffs.empty(); }
  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  bool operator==(const LinOp& other) const = default;
};

LinOp linop_make(std::vector<Series> coeffs);
LinOp linop_add(const LinOp& a, const LinOp& b, const Context& ctx);
LinOp linop_mul(const LinOp& a, const LinOp& b, const Context& ctx);
Series linop_apply(const LinOp& a, const Series& f, const Context& ctx);
LinOp linop_from_dp(const DiffPoly& P, const Context& ctx);
DiffPoly linop_to_dp(const LinOp& a);

// --- the omega map and friends ---

/// omega(z) = -2z' - z^2.
Series omega_map(const Series& z, const Context& ctx);

/// 2(u~~)' - (u~~)^2 + (u~)^2 where ~ is the logarithmic derivative;
/// the right-hand side of the second-order solvability condition.
Series theta(const Series& u, const Context& ctx);

/// Schwarzian derivative (u'~)' - (1/2)(u'~)^2.
Series schwarzian(const Series& u, const Context& ctx);

/// lambda_n = 1/l_0 + 1/(l_0 l_1) + ... + 1/(l_0...l_n), exact.
Series lambda_seq(int n, const Context& ctx);

/// omega_n = omega(lambda_n) = sum of 1/(l_0...l_i)^2, exact.
Series omega_seq(int n, const Context& ctx);

// --- membership predicates ---

/// f < lambda_N for N = depth(f)+2 (downward closure plus cofinality of
/// the lambda sequence).
bool in_Lambda(const Series& f, const Context& ctx);

/// f = 0, or -f~ lies outside Lambda(T) (the duality lemma).
bool in_I(const Series& f, const Context& ctx);

/// f < omega_N for N = depth(f)+2.
bool below_omega_cofinal(const Series& f, const Context& ctx);

/// Condition for 4y'' + fy = 0 to have a nonzero solution.
bool osc_criterion(const Series& f, const Context& ctx);

}  // namespace transcalc
