#include "freeiso/simplex.hpp"

namespace freeiso {

LpSolution maximize(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.b.size());
  const int n = static_cast<int>(lp.c.size());
  for (const Rat& bi : lp.b)
    if (bi < 0) throw Error("LpBadForm", "simplex expects b >= 0 (origin feasible)");

  // Columns: y+ (n), y- (n), slacks (m); rightmost column holds b.
  const int cols = 2 * n + m;
  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(cols + 1));
  std::vector<Rat> obj(cols + 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      tab[i][j] = lp.a[i][j];
      tab[i][n + j] = -lp.a[i][j];
    }
    tab[i][2 * n + i] = 1;
    tab[i][cols] = lp.b[i];
    basis[i] = 2 * n + i;
  }
  for (int j = 0; j < n; ++j) {
    obj[j] = lp.c[j];
    obj[n + j] = -lp.c[j];
  }

  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;  // Bland: smallest improving index
      }
    if (enter < 0) break;

    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = tab[i][cols] / tab[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) throw Error("LpUnbounded", "objective unbounded");

    Rat pivot = tab[leave][enter];
    for (int j = 0; j <= cols; ++j) tab[leave][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rat f = tab[i][enter];
      for (int j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      Rat f = obj[enter];
      for (int j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution out;
  out.value = -obj[cols];
  out.y.assign(n, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n)
      out.y[basis[i]] += tab[i][cols];
    else if (basis[i] < 2 * n)
      out.y[basis[i] - n] -= tab[i][cols];
  }
  return out;
}

}  // namespace freeiso
