#include "freeiso/isometry.hpp"

#include <algorithm>

namespace freeiso {
namespace {

void search(const FiniteMetricSpace& space, std::vector<int>& image,
            std::vector<char>& used, int depth,
            std::vector<std::vector<int>>& out) {
  const int n = space.size();
  if (depth == n) {
    out.push_back(image);
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < depth && ok; ++prev)
      if (space.dist(depth, prev) != space.dist(cand, image[prev])) ok = false;
    if (!ok) continue;
    used[cand] = 1;
    image[depth] = cand;
    search(space, image, used, depth + 1, out);
    used[cand] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> compute_isometries(const FiniteMetricSpace& space) {
  const int n = space.size();
  // Distance-multiset signatures prune the root level cheaply.
  std::vector<std::vector<Rat>> sig(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (j != i) sig[i].push_back(space.dist(i, j));
    std::sort(sig[i].begin(), sig[i].end());
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  for (int cand = 0; cand < n; ++cand) {
    if (sig[cand] != sig[0]) continue;
    used[cand] = 1;
    image[0] = cand;
    search(space, image, used, 1, out);
    used[cand] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat forced_dilation_scale(const FiniteMetricSpace& space) {
  if (space.size() < 2) return Rat(1);
  // A surjective a-dilation maps the (finite) distance multiset onto itself
  // scaled by 1/a, so the maximum distance satisfies max = max / a.
  Rat max_dist = 0;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (space.dist(i, j) > max_dist) max_dist = space.dist(i, j);
  if (max_dist <= 0) throw Error("InternalError", "degenerate distance matrix");
  return max_dist / max_dist;
}

std::vector<Dilation> compute_dilations(const FiniteMetricSpace& space) {
  Rat scale = forced_dilation_scale(space);
  std::vector<Dilation> out;
  for (auto& g : compute_isometries(space)) out.push_back({scale, std::move(g)});
  return out;
}

bool is_isometry(const FiniteMetricSpace& space, const std::vector<int>& map) {
  const int n = space.size();
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : map) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (space.dist(map[i], map[j]) != space.dist(i, j)) return false;
  return true;
}

}  // namespace freeiso
