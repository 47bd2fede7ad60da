#pragma once

namespace transcalc {

/// Evaluation limits. Every operation is a pure function of its inputs
/// and a Context; results never list more than term_budget terms, and
/// structures deeper than max_depth / taller than max_height are an
/// error rather than a silent truncation.
struct Context {
  int term_budget = 24;
  int max_depth = 8;
  int max_height = 8;
};

}  // namespace transcalc
