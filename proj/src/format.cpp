#include "transcalc/format.hpp"

#include <json.hpp>

namespace transcalc {

namespace {

std::string text_series(const Series& f);

std::string text_log_base(int i) {
  std::string out = "x";
  for (int j = 0; j < i; ++j) out = "log(" + out + ")";
  return out;
}

std::string text_monomial(const Monomial& m) {
  std::string out;
  const auto& e = m.log_exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += text_log_base(static_cast<int>(i));
    if (e[i] != 1) out += "^" + rat_str(e[i]);
  }
  if (m.exp_arg()) {
    if (!out.empty()) out += "*";
    out += "exp(" + text_series(*m.exp_arg()) + ")";
  }
  return out.empty() ? "1" : out;
}

std::string text_term(const Rat& coeff_abs, const Monomial& m) {
  std::string ms = m.is_one() ? "" : text_monomial(m);
  if (ms.empty()) return rat_str(coeff_abs);
  if (coeff_abs == 1) return ms;
  return rat_str(coeff_abs) + "*" + ms;
}

std::string text_series(const Series& f) {
  std::string out;
  for (const Term& t : f.terms()) {
    Rat a = abs(t.coeff);
    if (out.empty())
      out = (t.coeff < 0 ? "-" : "") + text_term(a, t.mono);
    else
      out += (t.coeff < 0 ? " - " : " + ") + text_term(a, t.mono);
  }
  if (f.tail()) {
    if (out.empty()) out = "0";
    out += " + O(" + text_monomial(*f.tail()) + ")";
  }
  return out.empty() ? "0" : out;
}

std::string latex_series(const Series& f);

std::string latex_rat(const Rat& r) {
  if (rat_is_integer(r)) return rat_str(r);
  std::string num = rat_num_str(r);
  std::string sign;
  if (!num.empty() && num[0] == '-') {
    sign = "-";
    num = num.substr(1);
  }
  return sign + "\\frac{" + num + "}{" + rat_den_str(r) + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  const auto& e = m.log_exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    std::string base = "x";
    for (std::size_t j = 0; j < i; ++j) base = "\\log " + base;
    if (i > 0 && e[i] != 1) base = "(" + base + ")";
    out += base;
    if (e[i] != 1) out += "^{" + rat_str(e[i]) + "}";
  }
  if (m.exp_arg()) {
    if (!out.empty()) out += " ";
    out += "\\mathrm{e}^{" + latex_series(*m.exp_arg()) + "}";
  }
  return out.empty() ? "1" : out;
}

std::string latex_series(const Series& f) {
  std::string out;
  for (const Term& t : f.terms()) {
    Rat a = abs(t.coeff);
    std::string body =
        t.mono.is_one()
            ? latex_rat(a)
            : (a == 1 ? latex_monomial(t.mono)
                      : latex_rat(a) + " " + latex_monomial(t.mono));
    if (out.empty())
      out = (t.coeff < 0 ? "-" : "") + body;
    else
      out += (t.coeff < 0 ? " - " : " + ") + body;
  }
  if (f.tail()) {
    if (out.empty()) out = "0";
    out += " + O\\!\\left(" + latex_monomial(*f.tail()) + "\\right)";
  }
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json json_series(const Series& f);

nlohmann::ordered_json json_monomial(const Monomial& m) {
  nlohmann::ordered_json j;
  j["logexp"] = nlohmann::ordered_json::array();
  for (const Rat& e : m.log_exponents()) j["logexp"].push_back(rat_str(e));
  j["exparg"] = m.exp_arg() ? json_series(*m.exp_arg())
                            : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json json_series(const Series& f) {
  nlohmann::ordered_json j;
  j["terms"] = nlohmann::ordered_json::array();
  for (const Term& t : f.terms()) {
    nlohmann::ordered_json jt;
    jt["monomial"] = json_monomial(t.mono);
    jt["coeff"] = rat_str(t.coeff);
    j["terms"].push_back(std::move(jt));
  }
  j["tail"] = f.tail() ? json_monomial(*f.tail())
                       : nlohmann::ordered_json(nullptr);
  return j;
}

std::string dp_var(std::size_t k) {
  if (k == 0) return "Y";
  if (k <= 3) return "Y" + std::string(k, '\'');
  return "Y^(" + std::to_string(k) + ")";
}

std::string dp_key(const MultiIndex& i) {
  std::string out;
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (i[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += dp_var(k);
    if (i[k] > 1) out += "^" + std::to_string(i[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string format_rat(const Rat& r) { return rat_str(r); }

std::string format_monomial(const Monomial& m, EmitMode mode) {
  switch (mode) {
    case EmitMode::Latex: return latex_monomial(m);
    case EmitMode::Json: return json_monomial(m).dump();
    default: return text_monomial(m);
  }
}

std::string format_series(const Series& f, EmitMode mode) {
  switch (mode) {
    case EmitMode::Latex: return latex_series(f);
    case EmitMode::Json: return json_series(f).dump();
    default: return text_series(f);
  }
}

std::string format_dp(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    const Series& c = it->second;
    bool single = c.terms().size() == 1 && !c.tail();
    bool negative = single && c.terms()[0].coeff < 0;
    std::string body;
    if (it->first.empty()) {
      body = single ? text_term(abs(c.terms()[0].coeff), c.terms()[0].mono)
                    : "(" + text_series(c) + ")";
    } else if (single) {
      std::string mag = text_term(abs(c.terms()[0].coeff), c.terms()[0].mono);
      body = mag == "1" ? dp_key(it->first) : mag + "*" + dp_key(it->first);
    } else {
      body = "(" + text_series(c) + ")*" + dp_key(it->first);
    }
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::string format_newton(const NewtonPoly& n) {
  if (n.coeffs.empty()) return "0";
  std::string out;
  for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) {
    Rat a = abs(it->second);
    std::string body =
        it->first.empty()
            ? rat_str(a)
            : (a == 1 ? dp_key(it->first) : rat_str(a) + "*" + dp_key(it->first));
    if (out.empty())
      out = (it->second < 0 ? "-" : "") + body;
    else
      out += (it->second < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::string format_gamma(const GammaElt& g) {
  return "v(" + text_monomial(g.mono) + ")";
}

}  // namespace transcalc
