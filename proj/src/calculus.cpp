#include "transcalc/calculus.hpp"

#include <algorithm>
#include <vector>

namespace transcalc {

namespace {

// (l_0 l_1 ... l_k)^-1
Monomial chain_inverse(int k, const Context& ctx) {
  std::vector<Rat> exps(static_cast<std::size_t>(k) + 1, Rat(-1));
  return make_monomial(std::move(exps), nullptr, ctx);
}

// m == (l_0...l_k)^-1 for some k? These are exactly the monomials where
// the integration ansatz degenerates.
bool is_chain_monomial(const Monomial& m, int& k_out) {
  if (!m.is_pure_log() || m.log_exponents().empty()) return false;
  for (const Rat& e : m.log_exponents())
    if (e != -1) return false;
  k_out = static_cast<int>(m.log_exponents().size()) - 1;
  return true;
}

}  // namespace

Series mono_logderiv(const Monomial& m, const Context& ctx) {
  std::vector<Term> terms;
  const auto& e = m.log_exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      terms.push_back(Term{chain_inverse(static_cast<int>(i), ctx), e[i]});
  Series out = make_series(std::move(terms), std::nullopt, ctx);
  if (m.exp_arg()) out = add(out, derive(*m.exp_arg(), ctx), ctx);
  return out;
}

Series derive(const Series& f, const Context& ctx) {
  Series acc;
  for (const Term& t : f.terms()) {
    Series dm = mul(series_monomial(t.mono, t.coeff),
                    mono_logderiv(t.mono, ctx), ctx);
    acc = add(acc, dm, ctx);
  }
  if (f.tail()) {
    std::optional<Monomial> bound;
    if (f.tail()->is_one()) {
      // O(1)' stays within O(1): constants die, infinitesimals shrink.
      bound = mono_one();
    } else {
      Series dt = mul(series_monomial(*f.tail()),
                      mono_logderiv(*f.tail(), ctx), ctx);
      bound = dominant_term(dt).mono;
    }
    acc = add(acc, make_series({}, bound, ctx), ctx);
  }
  return acc;
}

Series logderiv(const Series& f, const Context& ctx) {
  if (f.is_zero())
    fail(Errc::DivisionByZero, "logarithmic derivative of zero");
  return mul(derive(f, ctx), inv(f, ctx), ctx);
}

Term integrate_term(const Rat& c, const Monomial& m, const Context& ctx) {
  if (m.is_one()) return Term{mono_ell(0, ctx), c};
  int k = 0;
  if (is_chain_monomial(m, k)) return Term{mono_ell(k + 1, ctx), c};
  Monomial n = m;
  for (int iter = 0; iter <= ctx.max_depth + 4; ++iter) {
    Series g = mono_logderiv(n, ctx);
    if (!g.has_terms())
      fail(Errc::LimitExceeded, "integration ansatz hit a constant");
    Term d = dominant_term(g);
    Monomial cand = mono_mul(m, mono_inverse(d.mono, ctx), ctx);
    if (cand == n) return Term{n, c / d.coeff};
    n = cand;
  }
  fail(Errc::LimitExceeded, "integration ansatz did not stabilize");
}

Monomial antiderivative_monomial(const Monomial& m, const Context& ctx) {
  return integrate_term(Rat(1), m, ctx).mono;
}

Series integrate(const Series& f, const Context& ctx) {
  Series remainder = f;
  std::vector<Term> out;
  while (remainder.has_terms() &&
         out.size() < static_cast<std::size_t>(ctx.term_budget)) {
    Term lead = remainder.terms()[0];
    Term anti = integrate_term(lead.coeff, lead.mono, ctx);
    out.push_back(anti);
    remainder = sub(remainder,
                    derive(series_monomial(anti.mono, anti.coeff), ctx), ctx);
  }
  std::optional<Monomial> tail;
  if (remainder.has_terms())
    tail = antiderivative_monomial(remainder.terms()[0].mono, ctx);
  if (remainder.tail())
    tail = join_tails(tail, antiderivative_monomial(*remainder.tail(), ctx),
                      ctx);
  return make_series(std::move(out), std::move(tail), ctx);
}

Series exp(const Series& f, const Context& ctx) {
  SplitParts p = split(f, ctx);
  if (p.large.tail())
    fail(Errc::InexactLargePart,
         "exp of a purely large part with an O-tail; raise the term budget");
  if (p.constant.tail())
    fail(Errc::IndeterminateSign,
         "exp with an indeterminate constant term; raise the term budget");
  if (!p.constant.is_zero())
    fail(Errc::ConstantTermNotRepresentable,
         "exp of nonzero constant " + rat_str(p.constant.terms()[0].coeff) +
             " is not rational");
  Monomial m = p.large.is_zero()
                   ? mono_one()
                   : make_monomial({}, std::make_shared<Series>(p.large), ctx);
  Series unit = unit_expansion(p.small, ctx, [](unsigned long k) -> Rat {
    return Rat(1) / rat_factorial(k);
  });
  return mul(series_monomial(std::move(m)), unit, ctx);
}

Series log(const Series& f, const Context& ctx) {
  if (!f.has_terms()) {
    if (f.tail())
      fail(Errc::IndeterminateSign,
           "log of a value with no listed term; raise the term budget");
    fail(Errc::NotPositive, "log of zero");
  }
  Term lead = f.terms()[0];
  if (lead.coeff < 0) fail(Errc::NotPositive, "log of a negative value");
  if (lead.coeff != 1)
    fail(Errc::ConstantTermNotRepresentable,
         "log " + rat_str(lead.coeff) + " is not rational");
  Series logm = mono_log(lead.mono, ctx);
  Series eps = sub(mul(f, series_monomial(mono_inverse(lead.mono, ctx)), ctx),
                   series_const(Rat(1)), ctx);
  Series lg = unit_expansion(eps, ctx, [](unsigned long k) -> Rat {
    if (k == 0) return Rat(0);
    Rat c(1, static_cast<long>(k));
    return k % 2 == 0 ? -c : c;
  });
  return add(logm, lg, ctx);
}

namespace {

class CompositionCache {
 public:
  CompositionCache(const Series& g, const Context& ctx) : ctx_(ctx) {
    iterated_logs_.push_back(g);
  }

  // l_k composed with g, computed once per conjugacy level.
  const Series& ell(std::size_t k) {
    while (iterated_logs_.size() <= k)
      iterated_logs_.push_back(log(iterated_logs_.back(), ctx_));
    return iterated_logs_[k];
  }

 private:
  const Context& ctx_;
  std::vector<Series> iterated_logs_;
};

Series compose_monomial(const Monomial& m, const Series& g,
                        CompositionCache& cache, const Context& ctx) {
  Series piece = series_const(Rat(1));
  const auto& e = m.log_exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) piece = mul(piece, pow_rat(cache.ell(i), e[i], ctx), ctx);
  if (m.exp_arg())
    piece = mul(piece, exp(compose(*m.exp_arg(), g, ctx), ctx), ctx);
  return piece;
}

void check_positive_infinite(const Series& g, const Context& ctx) {
  SplitParts p = split(g, ctx);
  if (!p.large.has_terms() || sign(p.large) <= 0)
    fail(Errc::NotPositivelyInfinite,
         "composition argument must be positive infinite");
}

}  // namespace

Series compose(const Series& f, const Series& g, const Context& ctx) {
  check_positive_infinite(g, ctx);
  CompositionCache cache(g, ctx);
  Series acc;
  for (const Term& t : f.terms())
    acc = add(acc, scale(compose_monomial(t.mono, g, cache, ctx), t.coeff),
              ctx);
  if (f.tail()) {
    Series image = compose_monomial(*f.tail(), g, cache, ctx);
    std::optional<Monomial> bound;
    if (image.has_terms())
      bound = image.terms()[0].mono;
    else if (image.tail())
      bound = image.tail();
    if (bound) acc = add(acc, make_series({}, bound, ctx), ctx);
  }
  return acc;
}

namespace {

// Is f a single term 1*m?
bool is_unit_monomial(const Series& f, Monomial& m_out) {
  if (f.terms().size() != 1 || f.tail() || f.terms()[0].coeff != 1)
    return false;
  m_out = f.terms()[0].mono;
  return true;
}

// Shift l_{i+1} -> l_i in a series that mentions no l_0 and no exp
// factor; this is exact composition with e_1 on pure-log series.
bool shift_logs_down(const Series& f, const Context& ctx, Series& out) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    if (!t.mono.is_pure_log() || t.mono.log_exponent(0) != 0) return false;
    const auto& e = t.mono.log_exponents();
    std::vector<Rat> shifted(e.begin() + (e.empty() ? 0 : 1), e.end());
    terms.push_back(Term{make_monomial(std::move(shifted), nullptr, ctx),
                         t.coeff});
  }
  if (f.tail()) return false;
  out = make_series(std::move(terms), std::nullopt, ctx);
  return true;
}

}  // namespace

Series inverse_comp(const Series& g, const Context& ctx) {
  check_positive_infinite(g, ctx);
  Series target = series_x(ctx);

  Monomial m;
  if (is_unit_monomial(g, m)) {
    if (m.log_exponents().empty() && m.exp_arg()) {
      // g = exp(P): inverse is P^{-1} composed with log x.
      return compose(inverse_comp(*m.exp_arg(), ctx), series_ell(1, ctx),
                     ctx);
    }
  }
  Series shifted;
  if (series_height(g) == 0 && shift_logs_down(g, ctx, shifted) &&
      !shifted.is_zero()) {
    // g = G(log x): inverse is exp(G^{-1}).
    return exp(inverse_comp(shifted, ctx), ctx);
  }

  Rat r = dominant_term(g).mono.log_exponent(0);
  if (r <= 0)
    fail(Errc::NoConvergenceWithinBudget,
         "no dominant-term inverse ansatz for this monomial shape");

  // Dominant-term inverse by relative refinement.
  Series h = target;
  bool seeded = false;
  for (int it = 0; it <= ctx.term_budget + 4; ++it) {
    Series gh = compose(g, h, ctx);
    Term lead = dominant_term(gh);
    if (lead.mono == mono_ell(0, ctx) && lead.coeff == 1) {
      seeded = true;
      break;
    }
    h = mul(h, pow_rat(div(target, gh, ctx), Rat(1) / r, ctx), ctx);
    if (!h.has_terms() || sign(h) <= 0)
      fail(Errc::NoConvergenceWithinBudget,
           "dominant-term inverse iteration left the positive infinite cone");
  }
  if (!seeded)
    fail(Errc::NoConvergenceWithinBudget,
         "dominant-term inverse did not stabilize");

  // Newton under composition.
  Series gp = derive(g, ctx);
  bool converged = false;
  for (int it = 0; it <= ctx.term_budget + 4; ++it) {
    Series res = sub(target, compose(g, h, ctx), ctx);
    if (!res.has_terms()) {
      converged = true;
      break;
    }
    h = add(h, div(res, compose(gp, h, ctx), ctx), ctx);
  }
  if (!converged)
    fail(Errc::NoConvergenceWithinBudget,
         "Newton iteration did not reach the budget window");
  Series back = sub(compose(h, g, ctx), target, ctx);
  if (back.has_terms())
    fail(Errc::NoConvergenceWithinBudget,
         "compose-check failed on the left inverse");
  return h;
}

Series solve_linear1(const Series& a, const Series& b, const Context& ctx) {
  Series big_a = integrate(a, ctx);
  Series factor = exp(big_a, ctx);
  return mul(exp(neg(big_a), ctx), integrate(mul(factor, b, ctx), ctx), ctx);
}

}  // namespace transcalc
