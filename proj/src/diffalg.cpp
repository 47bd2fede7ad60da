#include "transcalc/diffalg.hpp"

#include <algorithm>

namespace transcalc {

namespace {

using PolyMap = std::map<MultiIndex, Series>;

MultiIndex mi_trim(MultiIndex i) {
  while (!i.empty() && i.back() == 0) i.pop_back();
  return i;
}

void pm_accumulate(PolyMap& into, const MultiIndex& key, const Series& val,
                   const Context& ctx) {
  if (val.is_zero()) return;
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, val);
  } else {
    it->second = add(it->second, val, ctx);
    if (it->second.is_zero()) into.erase(it);
  }
}

PolyMap pm_add(const PolyMap& a, const PolyMap& b, const Context& ctx) {
  PolyMap out = a;
  for (const auto& [k, v] : b) pm_accumulate(out, k, v, ctx);
  return out;
}

PolyMap pm_mul(const PolyMap& a, const PolyMap& b, const Context& ctx) {
  PolyMap out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b)
      pm_accumulate(out, mi_add(ka, kb), mul(va, vb, ctx), ctx);
  return out;
}

PolyMap pm_scale(const PolyMap& a, const Series& c, const Context& ctx) {
  PolyMap out;
  for (const auto& [k, v] : a) pm_accumulate(out, k, mul(v, c, ctx), ctx);
  return out;
}

PolyMap pm_pow(const PolyMap& a, unsigned n, const Context& ctx) {
  PolyMap acc{{MultiIndex{}, series_const(Rat(1))}};
  for (unsigned j = 0; j < n; ++j) acc = pm_mul(acc, a, ctx);
  return acc;
}

Monomial chain_inverse_mono(int k, const Context& ctx) {
  std::vector<Rat> exps(static_cast<std::size_t>(k) + 1, Rat(-1));
  return make_monomial(std::move(exps), nullptr, ctx);
}

}  // namespace

unsigned mi_degree(const MultiIndex& i) {
  unsigned d = 0;
  for (unsigned e : i) d += e;
  return d;
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return mi_trim(std::move(out));
}

int DiffPoly::order() const {
  int r = 0;
  for (const auto& [k, v] : coeffs)
    r = std::max(r, static_cast<int>(k.size()) - 1);
  return r;
}

DiffPoly dp_make(std::map<MultiIndex, Series> coeffs) {
  PolyMap out;
  for (auto& [k, v] : coeffs)
    if (!v.is_zero()) out.emplace(mi_trim(k), std::move(v));
  return DiffPoly{std::move(out)};
}

DiffPoly dp_zero() { return DiffPoly{}; }

DiffPoly dp_const(Series a) {
  if (a.is_zero()) return dp_zero();
  return DiffPoly{{{MultiIndex{}, std::move(a)}}};
}

DiffPoly dp_indeterminate(int k) {
  MultiIndex i(static_cast<std::size_t>(k) + 1, 0);
  i[k] = 1;
  return DiffPoly{{{mi_trim(std::move(i)), series_const(Rat(1))}}};
}

DiffPoly dp_add(const DiffPoly& a, const DiffPoly& b, const Context& ctx) {
  return DiffPoly{pm_add(a.coeffs, b.coeffs, ctx)};
}

DiffPoly dp_sub(const DiffPoly& a, const DiffPoly& b, const Context& ctx) {
  return dp_add(a, dp_neg(b), ctx);
}

DiffPoly dp_neg(const DiffPoly& a) {
  PolyMap out;
  for (const auto& [k, v] : a.coeffs) out.emplace(k, neg(v));
  return DiffPoly{std::move(out)};
}

DiffPoly dp_mul(const DiffPoly& a, const DiffPoly& b, const Context& ctx) {
  return DiffPoly{pm_mul(a.coeffs, b.coeffs, ctx)};
}

DiffPoly dp_scale(const DiffPoly& a, const Series& c, const Context& ctx) {
  return DiffPoly{pm_scale(a.coeffs, c, ctx)};
}

DiffPoly dp_pow(const DiffPoly& a, unsigned n, const Context& ctx) {
  return DiffPoly{pm_pow(a.coeffs, n, ctx)};
}

DiffPoly dp_derive(const DiffPoly& a, const Context& ctx) {
  PolyMap out;
  for (const auto& [k, v] : a.coeffs) {
    pm_accumulate(out, k, derive(v, ctx), ctx);
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      MultiIndex bumped = k;
      bumped[j] -= 1;
      if (bumped.size() < j + 2) bumped.resize(j + 2, 0);
      bumped[j + 1] += 1;
      pm_accumulate(out, mi_trim(std::move(bumped)),
                    scale(v, Rat(static_cast<long>(k[j]))), ctx);
    }
  }
  return DiffPoly{std::move(out)};
}

Series dp_eval(const DiffPoly& P, const Series& y, const Context& ctx) {
  std::vector<Series> derivs{y};
  for (int k = 0; k < P.order(); ++k)
    derivs.push_back(derive(derivs.back(), ctx));
  Series acc;
  for (const auto& [k, v] : P.coeffs) {
    Series term = v;
    for (std::size_t j = 0; j < k.size(); ++j)
      for (unsigned e = 0; e < k[j]; ++e) term = mul(term, derivs[j], ctx);
    acc = add(acc, term, ctx);
  }
  return acc;
}

bool dp_homogeneous(const DiffPoly& P, unsigned& degree_out) {
  if (P.is_zero()) return false;
  unsigned d = mi_degree(P.coeffs.begin()->first);
  for (const auto& [k, v] : P.coeffs)
    if (mi_degree(k) != d) return false;
  degree_out = d;
  return true;
}

int dp_depth(const DiffPoly& P) {
  int d = 0;
  for (const auto& [k, v] : P.coeffs) d = std::max(d, series_depth(v));
  return d;
}

// --- logarithmic decomposition ---

namespace {

// Derivation on polynomials in the Y<j>: coefficients differentiate and
// each Y<j> factor spawns a Y<j+1>, leaving its own exponent unchanged.
PolyMap lambda_derive(const PolyMap& a, const Context& ctx) {
  PolyMap out;
  for (const auto& [k, v] : a) {
    pm_accumulate(out, k, derive(v, ctx), ctx);
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      MultiIndex bumped = k;
      if (bumped.size() < j + 2) bumped.resize(j + 2, 0);
      bumped[j + 1] += 1;
      pm_accumulate(out, mi_trim(std::move(bumped)),
                    scale(v, Rat(static_cast<long>(k[j]))), ctx);
    }
  }
  return out;
}

}  // namespace

LogDecomposition log_decompose(const DiffPoly& P, const Context& ctx) {
  // E_k: Y^(k) as a polynomial in the Y<j>.
  std::vector<PolyMap> e;
  e.push_back(PolyMap{{MultiIndex{1}, series_const(Rat(1))}});
  for (int k = 0; k < P.order(); ++k)
    e.push_back(lambda_derive(e.back(), ctx));
  PolyMap acc;
  for (const auto& [k, v] : P.coeffs) {
    PolyMap term{{MultiIndex{}, v}};
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] > 0) term = pm_mul(term, pm_pow(e[j], k[j], ctx), ctx);
    acc = pm_add(acc, term, ctx);
  }
  return LogDecomposition{std::move(acc)};
}

Series eval_logmono(const Series& y, int n, const Context& ctx) {
  Series cur = y;
  for (int i = 0; i < n; ++i) {
    if (cur.is_zero())
      fail(Errc::UndefinedLogDerivative,
           "iterated logarithmic derivative hit zero at level " +
               std::to_string(i));
    cur = logderiv(cur, ctx);
  }
  return cur;
}

Series logdec_eval(const LogDecomposition& dec, const Series& y,
                   const Context& ctx) {
  int levels = 0;
  for (const auto& [k, v] : dec.coeffs)
    levels = std::max(levels, static_cast<int>(k.size()));
  std::vector<Series> lm;
  for (int j = 0; j < levels; ++j)
    lm.push_back(eval_logmono(y, j, ctx));
  Series acc;
  for (const auto& [k, v] : dec.coeffs) {
    Series term = v;
    for (std::size_t j = 0; j < k.size(); ++j)
      for (unsigned e = 0; e < k[j]; ++e) term = mul(term, lm[j], ctx);
    acc = add(acc, term, ctx);
  }
  return acc;
}

// --- compositional conjugation ---

namespace {

// Derivation delta = phi^-1 d on polynomials in the delta-derivatives.
PolyMap delta_derive(const PolyMap& a, const Series& phi_inv,
                     const Context& ctx) {
  PolyMap out;
  for (const auto& [k, v] : a) {
    pm_accumulate(out, k, mul(phi_inv, derive(v, ctx), ctx), ctx);
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      MultiIndex bumped = k;
      bumped[j] -= 1;
      if (bumped.size() < j + 2) bumped.resize(j + 2, 0);
      bumped[j + 1] += 1;
      pm_accumulate(out, mi_trim(std::move(bumped)),
                    scale(v, Rat(static_cast<long>(k[j]))), ctx);
    }
  }
  return out;
}

}  // namespace

DiffPoly comp_conjugate(const DiffPoly& P, const Series& phi,
                        const Context& ctx) {
  if (phi.is_zero())
    fail(Errc::DivisionByZero, "conjugation by zero");
  Series phi_inv = inv(phi, ctx);
  // q[k]: the image of Y^(k), via d = phi * delta.
  std::vector<PolyMap> q;
  q.push_back(PolyMap{{MultiIndex{1}, series_const(Rat(1))}});
  for (int k = 0; k < P.order(); ++k)
    q.push_back(pm_scale(delta_derive(q.back(), phi_inv, ctx), phi, ctx));
  PolyMap acc;
  for (const auto& [k, v] : P.coeffs) {
    PolyMap term{{MultiIndex{}, v}};
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] > 0) term = pm_mul(term, pm_pow(q[j], k[j], ctx), ctx);
    acc = pm_add(acc, term, ctx);
  }
  return DiffPoly{std::move(acc)};
}

Series dp_eval_delta(const DiffPoly& P, const Series& y, const Series& phi,
                     const Context& ctx) {
  Series phi_inv = inv(phi, ctx);
  std::vector<Series> derivs{y};
  for (int k = 0; k < P.order(); ++k)
    derivs.push_back(mul(phi_inv, derive(derivs.back(), ctx), ctx));
  Series acc;
  for (const auto& [k, v] : P.coeffs) {
    Series term = v;
    for (std::size_t j = 0; j < k.size(); ++j)
      for (unsigned e = 0; e < k[j]; ++e) term = mul(term, derivs[j], ctx);
    acc = add(acc, term, ctx);
  }
  return acc;
}

// --- Newton polynomials ---

namespace {

NewtonPoly newton_normalize(NewtonPoly n) {
  if (n.coeffs.empty()) return n;
  Rat top = n.coeffs.rbegin()->second;  // lexicographically maximal index
  for (auto& [k, v] : n.coeffs) v /= top;
  return n;
}

}  // namespace

NewtonPoly newton_poly(const DiffPoly& P, const Context& ctx) {
  if (P.is_zero())
    fail(Errc::ZeroArgument, "Newton polynomial of the zero polynomial");
  int cap = dp_depth(P) + 4;
  std::optional<NewtonPoly> prev;
  for (int n = 0; n <= cap; ++n) {
    Series phi = series_monomial(chain_inverse_mono(n, ctx));
    DiffPoly conj = comp_conjugate(P, phi, ctx);
    // a := a coefficient of minimal valuation (dominant monomial maximal).
    bool first = true;
    Monomial best;
    Rat best_coeff;
    for (const auto& [k, v] : conj.coeffs) {
      Term d = dominant_term(v);
      if (first || mono_cmp(d.mono, best, ctx) == Cmp::Greater) {
        best = d.mono;
        best_coeff = d.coeff;
        first = false;
      }
    }
    NewtonPoly cur;
    for (const auto& [k, v] : conj.coeffs) {
      Term d = dominant_term(v);
      if (mono_cmp(d.mono, best, ctx) == Cmp::Equal)
        cur.coeffs[k] = d.coeff / best_coeff;
    }
    cur = newton_normalize(std::move(cur));
    if (prev && cur == *prev) return cur;
    prev = std::move(cur);
  }
  fail(Errc::NoStabilization,
       "Newton polynomial did not stabilize within the conjugation cap");
}

bool newton_is_simple_shape(const NewtonPoly& n) {
  if (n.coeffs.empty()) return false;
  std::optional<unsigned> yprime_power;
  for (const auto& [k, v] : n.coeffs) {
    for (std::size_t j = 2; j < k.size(); ++j)
      if (k[j] != 0) return false;
    unsigned p = k.size() > 1 ? k[1] : 0;
    if (!yprime_power)
      yprime_power = p;
    else if (*yprime_power != p)
      return false;
  }
  return true;
}

// --- valuation function and equalizer ---

GammaElt vP_eval(const DiffPoly& P, const Monomial& g, const Context& ctx) {
  if (P.is_zero())
    fail(Errc::ZeroArgument, "v_P of the zero polynomial");
  Series val = dp_eval(P, series_monomial(g), ctx);
  if (val.is_zero())
    fail(Errc::ZeroArgument, "P vanishes exactly at this monomial");
  return gamma_of(val, ctx);
}

namespace {

// sign of v_P(gamma) - v_Q(gamma); a vanishing evaluation counts as
// infinite valuation.
int equalizer_sign(const DiffPoly& P, const DiffPoly& Q, const Monomial& g,
                   const Context& ctx) {
  Series pv = dp_eval(P, series_monomial(g), ctx);
  Series qv = dp_eval(Q, series_monomial(g), ctx);
  if (pv.is_zero() && qv.is_zero())
    fail(Errc::ZeroArgument, "both polynomials vanish at a probed monomial");
  if (pv.is_zero()) return 1;
  if (qv.is_zero()) return -1;
  switch (gamma_cmp(gamma_of(pv, ctx), gamma_of(qv, ctx), ctx)) {
    case Cmp::Less: return -1;
    case Cmp::Greater: return 1;
    default: return 0;
  }
}

Monomial lattice_point(const std::vector<Rat>& exps, const Context& ctx) {
  std::vector<Rat> copy = exps;
  return make_monomial(std::move(copy), nullptr, ctx);
}

struct LatticeSearch {
  const DiffPoly& p;
  const DiffPoly& q;
  const EqualizeBounds& bounds;
  const Context& ctx;
  std::vector<Rat> values;  // candidate exponents, descending

  int sign_at(std::vector<Rat> prefix, std::size_t coords_left,
              const Rat& fill) const {
    while (coords_left-- > 0) prefix.push_back(fill);
    return equalizer_sign(p, q, lattice_point(prefix, ctx), ctx);
  }

  // Searches coordinates [coord..D] under the fixed prefix; the sign is
  // nondecreasing as the probed monomial shrinks.
  std::optional<Monomial> descend(std::vector<Rat> prefix,
                                  std::size_t coord) const {
    std::size_t rest = bounds.max_log_index - coord;  // deeper coordinates
    std::size_t lo = 0, hi = values.size() - 1;
    while (lo <= hi) {
      std::size_t mid = (lo + hi) / 2;
      std::vector<Rat> at = prefix;
      at.push_back(values[mid]);
      int s_top = sign_at(at, rest, values.front());
      int s_bot = sign_at(at, rest, values.back());
      if (s_bot < 0) {
        lo = mid + 1;  // whole slice too large a monomial
      } else if (s_top > 0) {
        if (mid == 0) break;
        hi = mid - 1;
      } else {
        if (s_top == 0) {
          std::vector<Rat> full = at;
          for (std::size_t j = 0; j < rest; ++j) full.push_back(values.front());
          return lattice_point(full, ctx);
        }
        if (s_bot == 0) {
          std::vector<Rat> full = at;
          for (std::size_t j = 0; j < rest; ++j) full.push_back(values.back());
          return lattice_point(full, ctx);
        }
        if (rest == 0) return std::nullopt;  // crossing between points
        return descend(std::move(at), coord + 1);
      }
    }
    return std::nullopt;
  }
};

}  // namespace

Monomial equalize(const DiffPoly& P, const DiffPoly& Q,
                  const EqualizeBounds& bounds, const Context& ctx) {
  unsigned dp = 0, dq = 0;
  if (!dp_homogeneous(P, dp) || !dp_homogeneous(Q, dq))
    fail(Errc::NotHomogeneous, "equalizer needs homogeneous polynomials");
  if (dp == dq)
    fail(Errc::NotHomogeneous, "equalizer needs distinct degrees");
  const DiffPoly& hi = dp > dq ? P : Q;
  const DiffPoly& lo = dp > dq ? Q : P;

  LatticeSearch search{hi, lo, bounds, ctx, {}};
  long span = bounds.numer_span;
  for (long j = span; j >= -span; --j)
    search.values.push_back(
        make_rat(j, static_cast<long>(bounds.denominator)));
  auto found = search.descend({}, 0);
  if (!found)
    fail(Errc::NotFoundWithinBounds,
         "no equalizer on the searched monomial lattice");
  return *found;
}

// --- linear differential operators ---

namespace {

std::vector<Series> trim_op(std::vector<Series> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace

LinOp linop_make(std::vector<Series> coeffs) {
  return LinOp{trim_op(std::move(coeffs))};
}

LinOp linop_add(const LinOp& a, const LinOp& b, const Context& ctx) {
  std::vector<Series> out(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs.size()) out[i] = add(out[i], a.coeffs[i], ctx);
    if (i < b.coeffs.size()) out[i] = add(out[i], b.coeffs[i], ctx);
  }
  return linop_make(std::move(out));
}

LinOp linop_mul(const LinOp& a, const LinOp& b, const Context& ctx) {
  if (a.is_zero() || b.is_zero()) return LinOp{};
  std::vector<Series> out(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      // d^i (b_j u) expands by Leibniz into C(i,t) b_j^(i-t) u^(t).
      Series bder = b.coeffs[j];
      for (std::size_t t = i + 1; t-- > 0;) {
        Rat binom = rat_binom(Rat(static_cast<long>(i)), i - t);
        out[t + j] = add(out[t + j],
                         scale(mul(a.coeffs[i], bder, ctx), binom), ctx);
        if (t > 0) bder = derive(bder, ctx);
      }
    }
  }
  return linop_make(std::move(out));
}

Series linop_apply(const LinOp& a, const Series& f, const Context& ctx) {
  Series acc;
  Series der = f;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    acc = add(acc, mul(a.coeffs[i], der, ctx), ctx);
    der = derive(der, ctx);
  }
  return acc;
}

LinOp linop_from_dp(const DiffPoly& P, const Context& ctx) {
  (void)ctx;
  unsigned d = 0;
  if (!P.is_zero() && (!dp_homogeneous(P, d) || d != 1))
    fail(Errc::NotHomogeneous,
         "operator conversion needs a homogeneous degree-1 polynomial");
  std::vector<Series> coeffs;
  for (const auto& [k, v] : P.coeffs) {
    std::size_t pos = k.size() - 1;
    if (coeffs.size() <= pos) coeffs.resize(pos + 1);
    coeffs[pos] = v;
  }
  return linop_make(std::move(coeffs));
}

DiffPoly linop_to_dp(const LinOp& a) {
  std::map<MultiIndex, Series> coeffs;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    MultiIndex k(i + 1, 0);
    k[i] = 1;
    coeffs.emplace(std::move(k), a.coeffs[i]);
  }
  return dp_make(std::move(coeffs));
}

// --- the omega map and friends ---

Series omega_map(const Series& z, const Context& ctx) {
  return sub(scale(derive(z, ctx), Rat(-2)), mul(z, z, ctx), ctx);
}

Series theta(const Series& u, const Context& ctx) {
  if (u.is_zero())
    fail(Errc::UndefinedLogDerivative, "theta needs a nonzero argument");
  Series z1 = logderiv(u, ctx);
  if (z1.is_zero())
    fail(Errc::UndefinedLogDerivative,
         "theta needs a nonzero logarithmic derivative");
  Series z2 = logderiv(z1, ctx);
  return add(sub(scale(derive(z2, ctx), Rat(2)), mul(z2, z2, ctx), ctx),
             mul(z1, z1, ctx), ctx);
}

Series schwarzian(const Series& u, const Context& ctx) {
  Series up = derive(u, ctx);
  if (up.is_zero())
    fail(Errc::NonConstantRequired, "Schwarzian of a constant");
  Series w = logderiv(up, ctx);
  return sub(derive(w, ctx), scale(mul(w, w, ctx), make_rat(1, 2)), ctx);
}

Series lambda_seq(int n, const Context& ctx) {
  if (n < 0 || n > ctx.max_depth - 1)
    fail(Errc::LimitExceeded, "lambda index exceeds max_depth - 1");
  std::vector<Term> terms;
  for (int i = 0; i <= n; ++i)
    terms.push_back(Term{chain_inverse_mono(i, ctx), Rat(1)});
  return make_series(std::move(terms), std::nullopt, ctx);
}

Series omega_seq(int n, const Context& ctx) {
  if (n < 0 || n > ctx.max_depth - 1)
    fail(Errc::LimitExceeded, "omega index exceeds max_depth - 1");
  std::vector<Term> terms;
  for (int i = 0; i <= n; ++i) {
    std::vector<Rat> exps(static_cast<std::size_t>(i) + 1, Rat(-2));
    terms.push_back(
        Term{make_monomial(std::move(exps), nullptr, ctx), Rat(1)});
  }
  return make_series(std::move(terms), std::nullopt, ctx);
}

// --- membership predicates ---

namespace {

int cofinal_bound(const Series& f) { return series_depth(f) + 2; }

}  // namespace

bool in_Lambda(const Series& f, const Context& ctx) {
  return cmp(f, lambda_seq(cofinal_bound(f), ctx), ctx) == Cmp::Less;
}

bool in_I(const Series& f, const Context& ctx) {
  if (f.is_zero()) return true;
  return !in_Lambda(neg(logderiv(f, ctx)), ctx);
}

bool below_omega_cofinal(const Series& f, const Context& ctx) {
  return cmp(f, omega_seq(cofinal_bound(f), ctx), ctx) == Cmp::Less;
}

bool osc_criterion(const Series& f, const Context& ctx) {
  return below_omega_cofinal(f, ctx);
}

// Declared in calculus.hpp; lives here because it needs in_I.
Series small_int(const Series& y, const Context& ctx) {
  if (!in_I(y, ctx)) return Series();
  return integrate(y, ctx);
}

}  // namespace transcalc
