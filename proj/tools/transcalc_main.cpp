#include <unistd.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "transcalc/session.hpp"

using namespace transcalc;

namespace {

int run_lines(std::istream& in, Session& session, bool interactive,
              bool stop_on_error) {
  int last = 0;
  std::string line;
  if (interactive) std::cout << "tc> " << std::flush;
  while (std::getline(in, line)) {
    ReplResult r = repl_eval(line, session);
    if (!r.out.empty()) std::cout << r.out << "\n";
    if (r.status != 0) {
      last = r.status;
      if (stop_on_error) return last;
    }
    if (r.quit) break;
    if (interactive) std::cout << "tc> " << std::flush;
  }
  return interactive ? 0 : last;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transcalc: exact arithmetic on logarithmic-exponential "
               "transseries"};
  app.get_formatter()->column_width(28);

  int terms = 24, max_depth = 8, max_height = 8;
  std::string emit = "text";
  std::string expr;
  std::string script;
  app.add_option("--terms", terms, "listed terms per result")
      ->envname("TRANSCALC_TERMS")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-depth", max_depth, "iterated-logarithm depth limit")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-height", max_height, "exponential height limit")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--emit", emit, "output mode")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("-e,--eval", expr, "evaluate one expression and exit");
  app.add_option("script", script, "script file to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Session session;
  session.ctx.term_budget = terms;
  session.ctx.max_depth = max_depth;
  session.ctx.max_height = max_height;
  session.mode = emit == "latex" ? EmitMode::Latex
                 : emit == "json" ? EmitMode::Json
                                  : EmitMode::Text;

  if (!expr.empty()) {
    ReplResult r = repl_eval(expr, session);
    if (!r.out.empty()) std::cout << r.out << "\n";
    return r.status;
  }
  if (!script.empty()) {
    std::ifstream in(script);
    if (!in) {
      std::cerr << "cannot open " << script << "\n";
      return 2;
    }
    return run_lines(in, session, false, true);
  }
  bool tty = isatty(fileno(stdin));
  return run_lines(std::cin, session, tty, false);
}
