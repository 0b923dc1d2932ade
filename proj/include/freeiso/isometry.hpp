#pragma once

#include "freeiso/metric_space.hpp"

namespace freeiso {

/// All distance-preserving vertex permutations, found by backtracking with
/// distance-multiset pruning. Each entry maps point index -> point index.
std::vector<std::vector<int>> compute_isometries(const FiniteMetricSpace& space);

struct Dilation {
  Rat scale;
  std::vector<int> map;
};

/// All surjective a-dilations. On a finite space the distance multiset is
/// preserved by any such bijection and scaled by 1/a, so a = 1 is forced;
/// forced_dilation_scale checks that argument rather than assuming it.
std::vector<Dilation> compute_dilations(const FiniteMetricSpace& space);

Rat forced_dilation_scale(const FiniteMetricSpace& space);

bool is_isometry(const FiniteMetricSpace& space, const std::vector<int>& map);

}  // namespace freeiso
