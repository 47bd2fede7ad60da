#include "transcalc/session.hpp"

#include <sstream>

namespace transcalc {

namespace {

const Series& as_series(const Value& v, int pos) {
  if (const Series* s = std::get_if<Series>(&v)) return *s;
  fail(Errc::TypeError, "expected a transseries value", pos);
}

DiffPoly as_dp(const Value& v, int pos) {
  if (const DiffPoly* p = std::get_if<DiffPoly>(&v)) return *p;
  if (const Series* s = std::get_if<Series>(&v)) return dp_const(*s);
  fail(Errc::TypeError, "expected a differential polynomial", pos);
}

long as_small_int(const Value& v, int pos) {
  const Series& s = as_series(v, pos);
  if (s.terms().size() == 1 && !s.tail() && s.terms()[0].mono.is_one() &&
      rat_is_integer(s.terms()[0].coeff))
    return rat_to_long(s.terms()[0].coeff);
  if (s.is_zero()) return 0;
  fail(Errc::TypeError, "expected an integer literal", pos);
}

Monomial as_monomial(const Value& v, int pos) {
  const Series& s = as_series(v, pos);
  if (s.terms().size() == 1 && !s.tail() && s.terms()[0].coeff == 1)
    return s.terms()[0].mono;
  fail(Errc::TypeError, "expected a monomial (single term, coefficient 1)",
       pos);
}

bool is_dp(const Value& v) { return std::holds_alternative<DiffPoly>(v); }

Value eval_call(const Ast& node, Session& ss);

Value eval_node(const Ast& node, Session& ss) {
  const Context& ctx = ss.ctx;
  switch (node.kind) {
    case AstKind::Number:
      return series_const(node.number);
    case AstKind::Ident: {
      if (node.name == "x") return series_x(ctx);
      if (node.name == "Y") return dp_indeterminate(0);
      auto it = ss.bindings.find(node.name);
      if (it != ss.bindings.end()) return it->second;
      fail(Errc::UnknownFunction, "unbound identifier '" + node.name + "'",
           node.pos);
    }
    case AstKind::Add:
    case AstKind::Sub: {
      Value a = eval_node(*node.args[0], ss);
      Value b = eval_node(*node.args[1], ss);
      bool sub_op = node.kind == AstKind::Sub;
      if (is_dp(a) || is_dp(b)) {
        DiffPoly pa = as_dp(a, node.pos), pb = as_dp(b, node.pos);
        return sub_op ? dp_sub(pa, pb, ctx) : dp_add(pa, pb, ctx);
      }
      const Series &fa = as_series(a, node.pos), &fb = as_series(b, node.pos);
      return sub_op ? sub(fa, fb, ctx) : add(fa, fb, ctx);
    }
    case AstKind::Mul: {
      Value a = eval_node(*node.args[0], ss);
      Value b = eval_node(*node.args[1], ss);
      if (is_dp(a) || is_dp(b))
        return dp_mul(as_dp(a, node.pos), as_dp(b, node.pos), ctx);
      return mul(as_series(a, node.pos), as_series(b, node.pos), ctx);
    }
    case AstKind::Div: {
      Value a = eval_node(*node.args[0], ss);
      Value b = eval_node(*node.args[1], ss);
      if (is_dp(b))
        fail(Errc::TypeError, "cannot divide by a differential polynomial",
             node.pos);
      const Series& den = as_series(b, node.pos);
      if (is_dp(a)) return dp_scale(as_dp(a, node.pos), inv(den, ctx), ctx);
      return div(as_series(a, node.pos), den, ctx);
    }
    case AstKind::Neg: {
      Value a = eval_node(*node.args[0], ss);
      if (is_dp(a)) return dp_neg(as_dp(a, node.pos));
      return neg(as_series(a, node.pos));
    }
    case AstKind::Pow: {
      Value a = eval_node(*node.args[0], ss);
      if (is_dp(a)) {
        if (!rat_is_integer(node.number) || node.number < 0)
          fail(Errc::TypeError,
               "differential polynomial powers must be natural numbers",
               node.pos);
        return dp_pow(as_dp(a, node.pos),
                      static_cast<unsigned>(rat_to_long(node.number)), ctx);
      }
      return pow_rat(as_series(a, node.pos), node.number, ctx);
    }
    case AstKind::Call:
      return eval_call(node, ss);
  }
  fail(Errc::TypeError, "malformed expression", node.pos);
}

Value eval_call(const Ast& node, Session& ss) {
  const Context& ctx = ss.ctx;
  auto arg = [&](std::size_t i) { return eval_node(*node.args[i], ss); };
  auto sarg = [&](std::size_t i) { return as_series(arg(i), node.pos); };
  const std::string& fn = node.name;

  if (fn == "d") {
    Value a = arg(0);
    if (is_dp(a)) return dp_derive(as_dp(a, node.pos), ctx);
    return derive(as_series(a, node.pos), ctx);
  }
  if (fn == "log") return log(sarg(0), ctx);
  if (fn == "exp") return exp(sarg(0), ctx);
  if (fn == "int") return integrate(sarg(0), ctx);
  if (fn == "smallint") return small_int(sarg(0), ctx);
  if (fn == "compose") return compose(sarg(0), sarg(1), ctx);
  if (fn == "inverse") return inverse_comp(sarg(0), ctx);
  if (fn == "lt") {
    Term t = dominant_term(sarg(0));
    return series_monomial(t.mono, t.coeff);
  }
  if (fn == "sign") return SignValue{sign(sarg(0))};
  if (fn == "cmp") return cmp(sarg(0), sarg(1), ctx);
  if (fn == "asy") return asy_compare(sarg(0), sarg(1), ctx);
  if (fn == "split") return split(sarg(0), ctx);
  if (fn == "st") return standard_part(sarg(0), ctx);
  if (fn == "root") {
    long d = as_small_int(arg(1), node.pos);
    if (d <= 0) fail(Errc::ArityError, "root index must be positive", node.pos);
    return nth_root(sarg(0), static_cast<unsigned long>(d), ctx);
  }
  if (fn == "lambda") return lambda_seq(
      static_cast<int>(as_small_int(arg(0), node.pos)), ctx);
  if (fn == "omega") return omega_seq(
      static_cast<int>(as_small_int(arg(0), node.pos)), ctx);
  if (fn == "omega_map") return omega_map(sarg(0), ctx);
  if (fn == "theta") return theta(sarg(0), ctx);
  if (fn == "schwarzian") return schwarzian(sarg(0), ctx);
  if (fn == "newton") return newton_poly(as_dp(arg(0), node.pos), ctx);
  if (fn == "vP")
    return vP_eval(as_dp(arg(0), node.pos), as_monomial(arg(1), node.pos),
                   ctx);
  if (fn == "solve1") return solve_linear1(sarg(0), sarg(1), ctx);
  if (fn == "in_I") return in_I(sarg(0), ctx);
  if (fn == "in_Lambda") return in_Lambda(sarg(0), ctx);
  if (fn == "osc") return osc_criterion(sarg(0), ctx);
  if (fn == "gamma") return gamma_data(sarg(0), ctx);
  if (fn == "dpeval")
    return dp_eval(as_dp(arg(0), node.pos), sarg(1), ctx);
  if (fn == "conj")
    return comp_conjugate(as_dp(arg(0), node.pos), sarg(1), ctx);
  if (fn == "equalize")
    return series_monomial(equalize(as_dp(arg(0), node.pos),
                                    as_dp(arg(1), node.pos), EqualizeBounds{},
                                    ctx));
  if (fn == "opmul") {
    LinOp a = linop_from_dp(as_dp(arg(0), node.pos), ctx);
    LinOp b = linop_from_dp(as_dp(arg(1), node.pos), ctx);
    return linop_to_dp(linop_mul(a, b, ctx));
  }
  fail(Errc::UnknownFunction, "unknown function '" + fn + "'", node.pos);
}

std::string cmp_str(Cmp c) {
  switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Greater: return ">";
    default: return "=";
  }
}

std::string asy_str(const AsyResult& r) {
  std::string rel = r.rel == Cmp::Less      ? "-<"
                    : r.rel == Cmp::Greater ? ">-"
                                            : "=asymp=";
  return r.similar ? rel + " (similar)" : rel;
}

ReplResult run_command(const std::string& line, Session& ss) {
  std::istringstream in(line);
  std::string cmd;
  in >> cmd;
  if (cmd == ":quit") return {"", 0, true};
  if (cmd == ":mode") {
    std::string m;
    in >> m;
    if (m == "text") ss.mode = EmitMode::Text;
    else if (m == "latex") ss.mode = EmitMode::Latex;
    else if (m == "json") ss.mode = EmitMode::Json;
    else return {"usage: :mode text|latex|json", 2, false};
    return {"ok", 0, false};
  }
  if (cmd == ":set") {
    std::string what;
    long val = 0;
    if (!(in >> what >> val) || val < 0)
      return {"usage: :set terms|depth|height N", 2, false};
    if (what == "terms" && val > 0) ss.ctx.term_budget = static_cast<int>(val);
    else if (what == "depth") ss.ctx.max_depth = static_cast<int>(val);
    else if (what == "height") ss.ctx.max_height = static_cast<int>(val);
    else return {"usage: :set terms|depth|height N", 2, false};
    return {"ok", 0, false};
  }
  return {"unknown command " + cmd, 2, false};
}

}  // namespace

Value eval_ast(const Ast& node, Session& session) {
  return eval_node(node, session);
}

std::string format_value(const Value& v, EmitMode mode) {
  std::string body;
  if (const Series* s = std::get_if<Series>(&v)) return format_series(*s, mode);
  if (const DiffPoly* p = std::get_if<DiffPoly>(&v)) body = format_dp(*p);
  else if (const NewtonPoly* n = std::get_if<NewtonPoly>(&v))
    body = format_newton(*n);
  else if (const GammaElt* g = std::get_if<GammaElt>(&v))
    body = format_gamma(*g);
  else if (const GammaData* gd = std::get_if<GammaData>(&v))
    body = "(" + format_gamma(gd->gamma) + ", " + format_gamma(gd->prime) +
           ", " + format_gamma(gd->dagger) + ")";
  else if (const SplitParts* sp = std::get_if<SplitParts>(&v))
    body = "(" + format_series(sp->large, EmitMode::Text) + "; " +
           format_series(sp->constant, EmitMode::Text) + "; " +
           format_series(sp->small, EmitMode::Text) + ")";
  else if (const AsyResult* ar = std::get_if<AsyResult>(&v))
    body = asy_str(*ar);
  else if (const Cmp* c = std::get_if<Cmp>(&v))
    body = cmp_str(*c);
  else if (const SignValue* sv = std::get_if<SignValue>(&v))
    body = sv->s < 0 ? "-" : sv->s > 0 ? "+" : "0";
  else if (const bool* b = std::get_if<bool>(&v))
    body = *b ? "true" : "false";
  if (mode == EmitMode::Json) {
    std::string quoted = "{\"value\":\"";
    for (char ch : body) {
      if (ch == '"' || ch == '\\') quoted += '\\';
      quoted += ch;
    }
    return quoted + "\"}";
  }
  return body;
}

ReplResult repl_eval(const std::string& line, Session& session) {
  std::string trimmed = line;
  std::size_t a = trimmed.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {"", 0, false};
  std::size_t b = trimmed.find_last_not_of(" \t\r\n");
  trimmed = trimmed.substr(a, b - a + 1);
  if (trimmed.empty() || trimmed[0] == '#') return {"", 0, false};
  if (trimmed[0] == ':') return run_command(trimmed, session);
  try {
    ParsedLine parsed = parse_line(trimmed);
    Value v = eval_ast(*parsed.expr, session);
    if (parsed.assign_name) session.bindings[*parsed.assign_name] = v;
    return {format_value(v, session.mode), 0, false};
  } catch (const Error& e) {
    std::string out = std::string("error[") + errc_name(e.code()) + "]";
    if (e.position() >= 0) out += " at " + std::to_string(e.position() + 1);
    out += ": ";
    out += e.what();
    return {out, 1, false};
  }
}

}  // namespace transcalc
