#pragma once

#include "freeiso/metric_space.hpp"

namespace freeiso {

struct NormResult {
  Rat value;
  LipschitzWitness witness;  // optimal dual function, 1-Lipschitz, f(x) = value
};

/// Lipschitz-free norm of a molecule, computed as a minimum-cost
/// transportation problem between the positive and negative parts with the
/// metric as cost. The witness comes from the optimal flow potentials,
/// extended to the whole space by f(p) = min_j (f(j) + d(p, j)).
NormResult free_norm(const FiniteMetricSpace& space, const Molecule& x);

/// Same quantity through the dual route: maximize f(x) over functions that
/// are 1-Lipschitz on the support, by exact simplex. Independent of the flow
/// path; the two must agree exactly.
Rat free_norm_dual_lp(const FiniteMetricSpace& space, const Molecule& x);

}  // namespace freeiso
