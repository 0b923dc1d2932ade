#pragma once

#include <vector>

#include "freeiso/rational.hpp"

namespace freeiso {

/// Exact dense simplex for  max c.y  subject to  A y <= b,  y free,
/// with 0 feasible (every b >= 0 after the caller's normalization).
/// Free variables are split internally as y = y+ - y-. Bland's rule, so the
/// method terminates; all arithmetic is rational.
struct LinearProgram {
  std::vector<std::vector<Rat>> a;  // m x n
  std::vector<Rat> b;               // m
  std::vector<Rat> c;               // n
};

struct LpSolution {
  Rat value;
  std::vector<Rat> y;
};

LpSolution maximize(const LinearProgram& lp);

}  // namespace freeiso
