#pragma once

#include "c14/recurrence.hpp"
#include "c14/solutions.hpp"
#include "prop.hpp"

namespace prop {

inline c14::PolyF random_polyf(Gen& g) {
  c14::PolyF f;
  int n = g.integer(0, 2);
  for (int t = 0; t < n; ++t) {
    int a = g.integer(0, 1), b = g.integer(0, 2), c = g.integer(0, 1);
    if (a + b + c > 2 || a + b + c == 0) b = 1, a = c = 0;
    f.coeffs[{a, b, c}] += g.nonzero(5, 4);
    if (f.coeffs[{a, b, c}] == 0) f.coeffs.erase({a, b, c});
  }
  return f;
}

// Admissible parameters: zero theta table (the only consistent closure),
// beta_r for r >= 1, even psi constants, polynomial F, optional ttH0.
inline c14::SolutionParams random_params(Gen& g, int order, bool with_ttH0 = false) {
  using namespace c14;
  SolutionParams p;
  for (int r = 1; r <= 3; ++r)
    if (g.coin()) p.beta[r] = g.nonzero(5, 4);
  for (int r : {0, 2, 4})
    if (g.coin()) p.psi_const[r] = g.nonzero(5, 4);
  p.F = random_polyf(g);
  p.theta = close_table({}, order + 2).table;
  if (with_ttH0) {
    Invariants inv(order + 2);
    p.ttH0 = inv.tr.scaled(LambdaScalar::lambda_pow(g.integer(-1, 1), g.nonzero(3, 2))) +
             inv.G0.scaled(g.nonzero(3, 2)) + inv.mll.scaled(g.nonzero(3, 2));
  }
  return p;
}

}  // namespace prop
