#include "transcalc/series.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace transcalc {

namespace {

// Comparisons internally form log-differences, which mention l_{i+1} for
// an l_i in the input; give that machinery one extra level of headroom so
// legal inputs at the depth limit can still be compared.
Context relaxed(const Context& ctx) {
  Context c = ctx;
  c.max_depth += 1;
  return c;
}

bool is_single_log_factor(const Monomial& m, std::size_t& index_out) {
  if (!m.is_pure_log()) return false;
  const auto& e = m.log_exponents();
  std::size_t nonzero = 0, idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) {
      ++nonzero;
      idx = i;
      if (e[i] != 1) return false;
    }
  }
  if (nonzero != 1) return false;
  index_out = idx;
  return true;
}

}  // namespace

// --- Monomial basics ---

Rat Monomial::log_exponent(std::size_t i) const {
  return i < log_exps_.size() ? log_exps_[i] : Rat(0);
}

int Monomial::exp_height() const {
  return exp_arg_ ? 1 + series_height(*exp_arg_) : 0;
}

int Monomial::log_depth() const {
  int d = 0;
  for (std::size_t i = 0; i < log_exps_.size(); ++i)
    if (log_exps_[i] != 0) d = static_cast<int>(i);
  if (exp_arg_) d = std::max(d, series_depth(*exp_arg_));
  return d;
}

bool Monomial::operator==(const Monomial& other) const {
  if (log_exps_ != other.log_exps_) return false;
  if (!exp_arg_ != !other.exp_arg_) return false;
  if (exp_arg_ && *exp_arg_ != *other.exp_arg_) return false;
  return true;
}

bool Series::operator==(const Series& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != other.terms_[i].coeff) return false;
    if (terms_[i].mono != other.terms_[i].mono) return false;
  }
  if (tail_.has_value() != other.tail_.has_value()) return false;
  if (tail_ && *tail_ != *other.tail_) return false;
  return true;
}

// --- construction ---

Monomial make_monomial(std::vector<Rat> log_exps, SeriesPtr exp_arg,
                       const Context& ctx) {
  if (exp_arg && exp_arg->is_zero()) exp_arg = nullptr;
  if (exp_arg) {
    if (exp_arg->tail())
      fail(Errc::InexactLargePart,
           "exponential argument carries an O-tail; raise the term budget");
    // Fold c*l_i (i >= 1) factors into the log exponents.
    std::vector<Term> kept;
    bool folded = false;
    for (const Term& t : exp_arg->terms()) {
      std::size_t idx = 0;
      if (is_single_log_factor(t.mono, idx) && idx >= 1) {
        if (log_exps.size() < idx) log_exps.resize(idx, Rat(0));
        log_exps[idx - 1] += t.coeff;
        folded = true;
      } else {
        kept.push_back(t);
      }
    }
    if (folded || kept.empty()) {
      if (kept.empty())
        exp_arg = nullptr;
      else
        exp_arg = std::make_shared<Series>(
            make_series(std::move(kept), std::nullopt, ctx));
    }
  }
  if (exp_arg) {
    for (const Term& t : exp_arg->terms())
      if (mono_cmp(t.mono, mono_one(), ctx) != Cmp::Greater)
        fail(Errc::InexactLargePart,
             "exponential argument must be purely large");
  }
  while (!log_exps.empty() && log_exps.back() == 0) log_exps.pop_back();

  Monomial m;
  m.log_exps_ = std::move(log_exps);
  m.exp_arg_ = std::move(exp_arg);
  if (m.log_depth() > ctx.max_depth)
    fail(Errc::LimitExceeded, "logarithmic depth exceeds max_depth");
  if (m.exp_height() > ctx.max_height)
    fail(Errc::LimitExceeded, "exponential height exceeds max_height");
  return m;
}

Series finalize_sorted(std::vector<Term> terms, std::optional<Monomial> tail,
                       const Context& ctx) {
  if (tail) {
    std::erase_if(terms, [&](const Term& t) {
      return mono_cmp(t.mono, *tail, ctx) != Cmp::Greater;
    });
  }
  // Budget: keep the leading prefix, widen the tail over the discarded rest.
  if (terms.size() > static_cast<std::size_t>(ctx.term_budget)) {
    Monomial bound = terms[ctx.term_budget].mono;
    terms.resize(ctx.term_budget);
    tail = join_tails(tail, bound, ctx);
  }
  Series s;
  s.terms_ = std::move(terms);
  s.tail_ = std::move(tail);
  return s;
}

Series make_series(std::vector<Term> terms, std::optional<Monomial> tail,
                   const Context& ctx) {
  std::erase_if(terms, [](const Term& t) { return t.coeff == 0; });
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono, ctx) == Cmp::Greater;
  });
  // Merge runs of equal monomials.
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  return finalize_sorted(std::move(merged), std::move(tail), ctx);
}

Monomial mono_one() { return Monomial(); }

Monomial mono_ell(int k, const Context& ctx) {
  std::vector<Rat> exps(static_cast<std::size_t>(k) + 1, Rat(0));
  exps[k] = 1;
  return make_monomial(std::move(exps), nullptr, ctx);
}

Monomial mono_x_pow(const Rat& r, const Context& ctx) {
  return make_monomial({r}, nullptr, ctx);
}

Series series_zero() { return Series(); }

Series series_const(const Rat& c) {
  Series s;
  if (c != 0) {
    Context ctx;
    s = make_series({Term{mono_one(), c}}, std::nullopt, ctx);
  }
  return s;
}

Series series_monomial(Monomial m, Rat coeff) {
  if (coeff == 0) return Series();
  Context ctx;
  return make_series({Term{std::move(m), std::move(coeff)}}, std::nullopt, ctx);
}

Series series_x(const Context& ctx) {
  return series_monomial(mono_ell(0, ctx));
}

Series series_ell(int k, const Context& ctx) {
  return series_monomial(mono_ell(k, ctx));
}

Series iterated_exp(int n, const Context& ctx) {
  Series e = series_x(ctx);
  for (int i = 0; i < n; ++i) {
    Monomial m = make_monomial({}, std::make_shared<Series>(e), ctx);
    e = series_monomial(std::move(m));
  }
  return e;
}

// --- ordering of monomials ---

namespace {

// Lexicographic comparison of log-exponent vectors; reports the first
// differing index. l_0^r0...l_d^rd > 1 iff the first nonzero exponent is
// positive, so this is the order on pure log monomials.
Cmp lex_cmp(const Monomial& a, const Monomial& b, std::size_t& index_out) {
  std::size_t n = std::max(a.log_exponents().size(), b.log_exponents().size());
  for (std::size_t i = 0; i < n; ++i) {
    Rat ra = a.log_exponent(i), rb = b.log_exponent(i);
    if (ra != rb) {
      index_out = i;
      return ra > rb ? Cmp::Greater : Cmp::Less;
    }
  }
  return Cmp::Equal;
}

}  // namespace

Cmp mono_cmp(const Monomial& a, const Monomial& b, const Context& ctx) {
  std::size_t differ = 0;
  // Sign analysis of log a - log b = (Pa - Pb) + sum dr_i * l_{i+1};
  // exponential height strictly drops along the recursion.
  bool same_arg = a.exp_arg() == b.exp_arg();  // both null or same node
  if (!same_arg && a.exp_arg() && b.exp_arg())
    same_arg = *a.exp_arg() == *b.exp_arg();
  if (same_arg) return lex_cmp(a, b, differ);

  Context rctx = relaxed(ctx);
  Series dexp;
  if (a.exp_arg() && b.exp_arg())
    dexp = sub(*a.exp_arg(), *b.exp_arg(), rctx);
  else if (a.exp_arg())
    dexp = *a.exp_arg();
  else
    dexp = neg(*b.exp_arg());
  if (dexp.is_zero()) return lex_cmp(a, b, differ);
  if (!dexp.has_terms())
    fail(Errc::IndeterminateSign,
         "exponential arguments agree on every listed term; raise the "
         "term budget");

  int exp_sign = rat_sign(dexp.terms()[0].coeff);
  Cmp lex = lex_cmp(a, b, differ);
  if (lex == Cmp::Equal)
    return exp_sign > 0 ? Cmp::Greater : Cmp::Less;
  // The exp difference wins iff its dominant monomial beats the leading
  // log-part monomial l_{differ+1}. Equality cannot occur: canonical exp
  // arguments never contain a bare iterated-log term.
  Monomial ell = mono_ell(static_cast<int>(differ) + 1, rctx);
  switch (mono_cmp(dexp.terms()[0].mono, ell, rctx)) {
    case Cmp::Greater:
      return exp_sign > 0 ? Cmp::Greater : Cmp::Less;
    case Cmp::Less:
      return lex;
    case Cmp::Equal:
      fail(Errc::LimitExceeded,
           "internal: bare iterated log inside an exponential argument");
  }
  return lex;
}

Series mono_log(const Monomial& m, const Context& ctx) {
  std::vector<Term> terms;
  const auto& e = m.log_exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      terms.push_back(Term{mono_ell(static_cast<int>(i) + 1, ctx), e[i]});
  std::optional<Monomial> tail;
  if (m.exp_arg()) {
    for (const Term& t : m.exp_arg()->terms()) terms.push_back(t);
    tail = m.exp_arg()->tail();
  }
  return make_series(std::move(terms), std::move(tail), ctx);
}

// --- monomial group operations ---

Monomial mono_mul(const Monomial& a, const Monomial& b, const Context& ctx) {
  // Canonical inputs yield a canonical product: summing exp arguments can
  // neither create bare iterated-log terms nor lose pure largeness, and
  // depth and height never exceed the larger input's.
  Monomial out;
  out.log_exps_.resize(
      std::max(a.log_exponents().size(), b.log_exponents().size()), Rat(0));
  for (std::size_t i = 0; i < out.log_exps_.size(); ++i)
    out.log_exps_[i] = a.log_exponent(i) + b.log_exponent(i);
  while (!out.log_exps_.empty() && out.log_exps_.back() == 0)
    out.log_exps_.pop_back();
  if (a.exp_arg() && b.exp_arg()) {
    Series sum = add(*a.exp_arg(), *b.exp_arg(), ctx);
    if (sum.tail())
      fail(Errc::InexactLargePart,
           "combined exponential argument exceeds the term budget");
    if (!sum.is_zero()) out.exp_arg_ = std::make_shared<Series>(std::move(sum));
  } else if (a.exp_arg()) {
    out.exp_arg_ = a.exp_arg();
  } else if (b.exp_arg()) {
    out.exp_arg_ = b.exp_arg();
  }
  return out;
}

Monomial mono_pow(const Monomial& m, const Rat& r, const Context& ctx) {
  (void)ctx;
  if (r == 0) return mono_one();
  Monomial out;
  out.log_exps_ = m.log_exponents();
  for (Rat& e : out.log_exps_) e *= r;
  if (m.exp_arg())
    out.exp_arg_ = std::make_shared<Series>(scale(*m.exp_arg(), r));
  return out;
}

Monomial mono_inverse(const Monomial& m, const Context& ctx) {
  return mono_pow(m, Rat(-1), ctx);
}

// --- ring operations ---

Series add(const Series& f, const Series& g, const Context& ctx) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  // Merge of two strictly decreasing term lists.
  std::vector<Term> out;
  out.reserve(f.terms().size() + g.terms().size());
  std::size_t i = 0, j = 0;
  while (i < f.terms().size() && j < g.terms().size()) {
    const Term& a = f.terms()[i];
    const Term& b = g.terms()[j];
    switch (mono_cmp(a.mono, b.mono, ctx)) {
      case Cmp::Greater:
        out.push_back(a);
        ++i;
        break;
      case Cmp::Less:
        out.push_back(b);
        ++j;
        break;
      case Cmp::Equal: {
        Rat c = a.coeff + b.coeff;
        if (c != 0) out.push_back(Term{a.mono, std::move(c)});
        ++i;
        ++j;
        break;
      }
    }
  }
  for (; i < f.terms().size(); ++i) out.push_back(f.terms()[i]);
  for (; j < g.terms().size(); ++j) out.push_back(g.terms()[j]);
  return finalize_sorted(std::move(out), join_tails(f.tail(), g.tail(), ctx),
                         ctx);
}

Series neg(const Series& f) { return scale(f, Rat(-1)); }

Series sub(const Series& f, const Series& g, const Context& ctx) {
  return add(f, neg(g), ctx);
}

Series scale(const Series& f, const Rat& c) {
  if (c == 0) return Series();
  // Scaling by a nonzero constant preserves order, support and tail.
  Series out = f;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Series mul(const Series& f, const Series& g, const Context& ctx) {
  if (f.is_zero() || g.is_zero()) return Series();
  std::vector<Term> terms;
  terms.reserve(f.terms().size() * g.terms().size());
  for (const Term& a : f.terms())
    for (const Term& b : g.terms())
      terms.push_back(Term{mono_mul(a.mono, b.mono, ctx), a.coeff * b.coeff});
  // Every omitted cross term is bounded by one of these.
  std::optional<Monomial> tail;
  if (f.tail() && g.has_terms())
    tail = join_tails(tail, mono_mul(*f.tail(), g.terms()[0].mono, ctx), ctx);
  if (g.tail() && f.has_terms())
    tail = join_tails(tail, mono_mul(f.terms()[0].mono, *g.tail(), ctx), ctx);
  if (f.tail() && g.tail())
    tail = join_tails(tail, mono_mul(*f.tail(), *g.tail(), ctx), ctx);
  // Translation by a fixed monomial preserves the term order.
  if (f.terms().size() <= 1 || g.terms().size() <= 1)
    return finalize_sorted(std::move(terms), std::move(tail), ctx);
  return make_series(std::move(terms), std::move(tail), ctx);
}

Series unit_expansion(const Series& eps, const Context& ctx,
                      const std::function<Rat(unsigned long)>& coeff_at) {
  Series acc = series_const(coeff_at(0));
  if (eps.is_zero()) return acc;
  unsigned long last = static_cast<unsigned long>(ctx.term_budget) + 1;
  Monomial bound = eps.has_terms() ? eps.terms()[0].mono : *eps.tail();
  // Everything at or below bound^(last+1) lands under the remainder tail
  // no matter what, so the powers may absorb such terms as they go.
  std::optional<Monomial> guard = join_tails(
      mono_pow(bound, Rat(static_cast<long>(last) + 1), ctx), eps.tail(),
      ctx);
  Series windowed = finalize_sorted(eps.terms(), guard, ctx);
  Series pw = series_const(Rat(1));
  for (unsigned long k = 1; k <= last; ++k) {
    pw = mul(pw, windowed, ctx);
    if (!pw.has_terms()) break;  // sunk below the window
    Rat c = coeff_at(k);
    if (c != 0) acc = add(acc, scale(pw, c), ctx);
  }
  // The unexpanded powers and any hidden input terms; the callers'
  // expansions never terminate for nonzero eps, so a tail is always due.
  return add(acc, finalize_sorted({}, guard, ctx), ctx);
}

Series inv(const Series& f, const Context& ctx) {
  if (f.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  if (!f.has_terms())
    fail(Errc::IndeterminateSign,
         "inverse of a value with no listed term; raise the term budget");
  const Term& lead = f.terms()[0];
  Series unit = mul(
      f, series_monomial(mono_inverse(lead.mono, ctx), Rat(1) / lead.coeff),
      ctx);
  Series eps = sub(unit, series_const(Rat(1)), ctx);
  Series s = unit_expansion(eps, ctx, [](unsigned long k) -> Rat {
    return k % 2 == 0 ? Rat(1) : Rat(-1);  // 1/(1+eps) = sum (-eps)^k
  });
  return mul(series_monomial(mono_inverse(lead.mono, ctx),
                             Rat(1) / lead.coeff),
             s, ctx);
}

Series div(const Series& f, const Series& g, const Context& ctx) {
  return mul(f, inv(g, ctx), ctx);
}

Series pow_rat(const Series& f, const Rat& r, const Context& ctx) {
  if (r == 0) return series_const(Rat(1));
  if (f.is_zero()) {
    if (r < 0) fail(Errc::DivisionByZero, "negative power of zero");
    return Series();
  }
  if (rat_is_integer(r) && rat_fits_long(r)) {
    long e = rat_to_long(r);
    Series base = e < 0 ? inv(f, ctx) : f;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e)
                            : static_cast<unsigned long>(e);
    Series acc = series_const(Rat(1));
    while (n > 0) {
      if (n & 1) acc = mul(acc, base, ctx);
      base = mul(base, base, ctx);
      n >>= 1;
    }
    return acc;
  }
  if (!f.has_terms())
    fail(Errc::IndeterminateSign,
         "fractional power of a value with no listed term");
  const Term& lead = f.terms()[0];
  if (lead.coeff < 0)
    fail(Errc::NegativeLeading, "fractional power of a negative value");
  auto c = rat_pow(lead.coeff, r);
  if (!c)
    fail(Errc::CoeffNotRepresentable,
         "leading coefficient " + rat_str(lead.coeff) + "^" + rat_str(r) +
             " is not rational");
  Series unit = mul(
      f, series_monomial(mono_inverse(lead.mono, ctx), Rat(1) / lead.coeff),
      ctx);
  Series eps = sub(unit, series_const(Rat(1)), ctx);
  Series s = unit_expansion(eps, ctx,
                            [&](unsigned long k) -> Rat { return rat_binom(r, k); });
  return scale(mul(series_monomial(mono_pow(lead.mono, r, ctx)), s, ctx), *c);
}

Series nth_root(const Series& f, unsigned long d, const Context& ctx) {
  if (d == 0) fail(Errc::ArityError, "root index must be positive");
  if (f.is_zero()) return Series();
  if (!f.has_terms()) fail(Errc::IndeterminateSign, "root of O-tail value");
  if (f.terms()[0].coeff < 0)
    fail(Errc::NegativeLeading, "root of a negative value");
  return pow_rat(f, make_rat(1, static_cast<long>(d)), ctx);
}

// --- ordering ---

int sign(const Series& f) {
  if (!f.has_terms()) {
    if (f.tail())
      fail(Errc::IndeterminateSign,
           "sign of a value with no listed term; raise the term budget");
    return 0;
  }
  return rat_sign(f.terms()[0].coeff);
}

Cmp cmp(const Series& f, const Series& g, const Context& ctx) {
  int s = sign(sub(f, g, ctx));
  return s < 0 ? Cmp::Less : s > 0 ? Cmp::Greater : Cmp::Equal;
}

AsyResult asy_compare(const Series& f, const Series& g, const Context& ctx) {
  if (f.is_zero() && g.is_zero())
    fail(Errc::UndefinedOnZero, "asymptotic comparison of zero with zero");
  if (f.is_zero()) return {Cmp::Less, false};
  if (g.is_zero()) return {Cmp::Greater, false};
  if (!f.has_terms() || !g.has_terms())
    fail(Errc::IndeterminateSign,
         "asymptotic comparison with no listed term; raise the term budget");
  const Term& a = f.terms()[0];
  const Term& b = g.terms()[0];
  Cmp c = mono_cmp(a.mono, b.mono, ctx);
  bool sim = c == Cmp::Equal && a.coeff == b.coeff;
  return {c, sim};
}

SplitParts split(const Series& f, const Context& ctx) {
  SplitParts out;
  std::vector<Term> large, constant, small;
  for (const Term& t : f.terms()) {
    Cmp c = mono_cmp(t.mono, mono_one(), ctx);
    if (c == Cmp::Greater)
      large.push_back(t);
    else if (c == Cmp::Equal)
      constant.push_back(t);
    else
      small.push_back(t);
  }
  std::optional<Monomial> tl, tc, ts;
  if (f.tail()) {
    Cmp c = mono_cmp(*f.tail(), mono_one(), ctx);
    if (c == Cmp::Greater)
      tl = f.tail();
    else if (c == Cmp::Equal)
      tc = f.tail();
    else
      ts = f.tail();
  }
  out.large = make_series(std::move(large), std::move(tl), ctx);
  out.constant = make_series(std::move(constant), std::move(tc), ctx);
  out.small = make_series(std::move(small), std::move(ts), ctx);
  return out;
}

Series standard_part(const Series& f, const Context& ctx) {
  SplitParts p = split(f, ctx);
  return add(p.large, p.constant, ctx);
}

Term dominant_term(const Series& f) {
  if (!f.has_terms()) {
    if (f.tail())
      fail(Errc::IndeterminateSign,
           "dominant term hidden in the O-tail; raise the term budget");
    fail(Errc::ZeroHasNoDominantTerm, "zero has no dominant term");
  }
  return f.terms()[0];
}

// --- helpers ---

int series_depth(const Series& f) {
  int d = 0;
  for (const Term& t : f.terms()) d = std::max(d, t.mono.log_depth());
  if (f.tail()) d = std::max(d, f.tail()->log_depth());
  return d;
}

int series_height(const Series& f) {
  int h = 0;
  for (const Term& t : f.terms()) h = std::max(h, t.mono.exp_height());
  if (f.tail()) h = std::max(h, f.tail()->exp_height());
  return h;
}

bool is_purely_large(const Series& f, const Context& ctx) {
  if (f.tail()) return false;
  if (!f.has_terms()) return false;
  for (const Term& t : f.terms())
    if (mono_cmp(t.mono, mono_one(), ctx) != Cmp::Greater) return false;
  return true;
}

std::optional<Monomial> join_tails(const std::optional<Monomial>& a,
                                   const std::optional<Monomial>& b,
                                   const Context& ctx) {
  if (!a) return b;
  if (!b) return a;
  return mono_cmp(*a, *b, ctx) == Cmp::Less ? *b : *a;
}

}  // namespace transcalc
