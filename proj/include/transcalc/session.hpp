#pragma once

#include <map>
#include <string>
#include <variant>

#include "transcalc/diffalg.hpp"
#include "transcalc/format.hpp"
#include "transcalc/parser.hpp"

namespace transcalc {

struct SignValue {
  int s;  // -1, 0, +1
};

/// Everything a REPL line can evaluate to.
using Value = std::variant<Series, DiffPoly, NewtonPoly, GammaElt, GammaData,
                           SplitParts, AsyResult, Cmp, SignValue, bool>;

struct Session {
  Context ctx;
  EmitMode mode = EmitMode::Text;
  std::map<std::string, Value> bindings;
};

struct ReplResult {
  std::string out;
  int status = 0;  // 0 ok, 1 evaluation error, 2 usage error
  bool quit = false;
};

/// Evaluates one REPL line: a `:command`, a `name = expr` binding, or an
/// expression. Diagnostics are single lines carrying the stable error
/// code and, for parse errors, the source position.
ReplResult repl_eval(const std::string& line, Session& session);

Value eval_ast(const Ast& node, Session& session);

std::string format_value(const Value& v, EmitMode mode);

}  // namespace transcalc
