#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "transcalc/context.hpp"
#include "transcalc/error.hpp"
#include "transcalc/rational.hpp"

namespace transcalc {

class Series;
using SeriesPtr = std::shared_ptr<const Series>;

/// Canonical transmonomial l0^r0 * l1^r1 * ... * ld^rd * exp(P).
///
/// l0 = x, l1 = log x, l2 = log log x, ... The exponential argument P,
/// when present, is a nonzero purely large series that carries no term
/// c*l_i with i >= 1 (those fold into the log exponents, since
/// exp(c*l_i) = l_{i-1}^c); a term c*x may remain inside it. Trailing
/// zero exponents are trimmed, so equal monomials are structurally equal.
class Monomial {
 public:
  Monomial() = default;  // the identity monomial 1

  const std::vector<Rat>& log_exponents() const { return log_exps_; }
  const SeriesPtr& exp_arg() const { return exp_arg_; }

  bool is_one() const { return log_exps_.empty() && !exp_arg_; }
  bool is_pure_log() const { return !exp_arg_; }

  /// Exponent of l_i (zero beyond the stored prefix).
  Rat log_exponent(std::size_t i) const;

  int exp_height() const;
  int log_depth() const;

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<Rat> log_exps_;
  SeriesPtr exp_arg_;

  friend Monomial make_monomial(std::vector<Rat> log_exps, SeriesPtr exp_arg,
                                const Context& ctx);
  friend Monomial mono_mul(const Monomial& a, const Monomial& b,
                           const Context& ctx);
  friend Monomial mono_pow(const Monomial& m, const Rat& r,
                           const Context& ctx);
};

struct Term {
  Monomial mono;
  Rat coeff;
};

enum class Cmp { Less, Equal, Greater };

/// A transseries at some precision budget: finitely many terms with
/// nonzero coefficients, monomials strictly decreasing, plus an optional
/// O-tail. A tail bound t means "plus unlisted terms, all strictly below
/// every listed monomial and bounded by t". Empty terms and no tail is
/// exactly zero. Listed terms of any operation are true leading terms of
/// the exact result, so enlarging the budget only extends the prefix.
class Series {
 public:
  Series() = default;  // zero

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Monomial>& tail() const { return tail_; }

  bool is_zero() const { return terms_.empty() && !tail_; }
  bool has_terms() const { return !terms_.empty(); }

  bool operator==(const Series& other) const;
  bool operator!=(const Series& other) const { return !(*this == other); }

 private:
  std::vector<Term> terms_;
  std::optional<Monomial> tail_;

  friend Series make_series(std::vector<Term> terms,
                            std::optional<Monomial> tail, const Context& ctx);
  friend Series finalize_sorted(std::vector<Term> terms,
                                std::optional<Monomial> tail,
                                const Context& ctx);
  friend Series scale(const Series& f, const Rat& c);
};

/// Normalization steps for a term list that is already strictly
/// decreasing with nonzero coefficients (tail absorption and budget).
Series finalize_sorted(std::vector<Term> terms, std::optional<Monomial> tail,
                       const Context& ctx);

// --- construction ---

/// Canonicalizing monomial factory: folds exp-argument terms c*l_i
/// (i >= 1) into the log exponents, trims, and enforces depth/height
/// limits. exp_arg must be exact (no tail) and purely large.
Monomial make_monomial(std::vector<Rat> log_exps, SeriesPtr exp_arg,
                       const Context& ctx);

/// Normalizing series factory: sorts terms in decreasing monomial order,
/// merges duplicates, drops zero coefficients, absorbs terms bounded by
/// the tail, and truncates to the term budget (widening the tail so it
/// dominates everything discarded).
Series make_series(std::vector<Term> terms, std::optional<Monomial> tail,
                   const Context& ctx);

Monomial mono_one();
Monomial mono_ell(int k, const Context& ctx);       // l_k
Monomial mono_x_pow(const Rat& r, const Context& ctx);

Series series_zero();
Series series_const(const Rat& c);
Series series_monomial(Monomial m, Rat coeff = Rat(1));
Series series_x(const Context& ctx);
Series series_ell(int k, const Context& ctx);       // l_k as a series
Series iterated_exp(int n, const Context& ctx);     // e_n = exp(...exp(x))

// --- monomial operations ---

Cmp mono_cmp(const Monomial& a, const Monomial& b, const Context& ctx);
Monomial mono_mul(const Monomial& a, const Monomial& b, const Context& ctx);
Monomial mono_pow(const Monomial& m, const Rat& r, const Context& ctx);
Monomial mono_inverse(const Monomial& m, const Context& ctx);

/// log m as a series: sum of r_i * l_{i+1} plus the exp argument.
Series mono_log(const Monomial& m, const Context& ctx);

/// m' / m, exact: sum of r_i / (l_0...l_i) plus the derivative of the
/// exp argument.
Series mono_logderiv(const Monomial& m, const Context& ctx);

// --- field arithmetic ---

Series add(const Series& f, const Series& g, const Context& ctx);
Series neg(const Series& f);
Series sub(const Series& f, const Series& g, const Context& ctx);
Series mul(const Series& f, const Series& g, const Context& ctx);
Series scale(const Series& f, const Rat& c);
Series inv(const Series& f, const Context& ctx);
Series div(const Series& f, const Series& g, const Context& ctx);

/// f^r for rational r. Needs the leading coefficient's r-th power to be
/// rational; the unit part expands as a binomial series.
Series pow_rat(const Series& f, const Rat& r, const Context& ctx);

/// d-th root of f, leading coefficient > 0 and a d-th power in Q.
Series nth_root(const Series& f, unsigned long d, const Context& ctx);

// --- ordering and asymptotic comparison ---

/// -1, 0 or +1. IndeterminateSign if f has a tail but no listed term.
int sign(const Series& f);

Cmp cmp(const Series& f, const Series& g, const Context& ctx);

struct AsyResult {
  Cmp rel;       // Less: f < g asymptotically (f strictly dominated)
  bool similar;  // f ~ g: equal dominant terms
};

/// Dominance comparison by dominant monomials, plus the f ~ g flag.
/// UndefinedOnZero when both arguments are zero.
AsyResult asy_compare(const Series& f, const Series& g, const Context& ctx);

struct SplitParts {
  Series large;     // monomials > 1
  Series constant;  // the unity monomial
  Series small;     // monomials < 1
};

/// Splits f into purely infinite, constant and infinitesimal parts.
/// A tail lands in the part whose class contains its bound.
SplitParts split(const Series& f, const Context& ctx);

/// Standard part: f minus its infinitesimal part.
Series standard_part(const Series& f, const Context& ctx);

Term dominant_term(const Series& f);

// --- helpers shared across modules ---

/// sum_k coeff_at(k) * eps^k for infinitesimal eps, truncated after
/// term_budget+1 powers with a sound remainder bound d(eps)^(n+1).
/// coeff_at must not vanish at one index and reappear later.
Series unit_expansion(const Series& eps, const Context& ctx,
                      const std::function<Rat(unsigned long)>& coeff_at);


/// Max iterated-log index appearing anywhere in f, recursively.
int series_depth(const Series& f);
int series_height(const Series& f);

bool is_purely_large(const Series& f, const Context& ctx);

/// The larger of two optional tail bounds.
std::optional<Monomial> join_tails(const std::optional<Monomial>& a,
                                   const std::optional<Monomial>& b,
                                   const Context& ctx);

}  // namespace transcalc
