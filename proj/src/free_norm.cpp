#include "freeiso/free_norm.hpp"

#include <queue>
#include <tuple>

#include "freeiso/simplex.hpp"

namespace freeiso {
namespace {

struct Arc {
  int to;
  Rat cap;
  Rat cost;
  int rev;
};

class FlowNet {
public:
  explicit FlowNet(int n) : adj_(n) {}

  void add_arc(int u, int v, const Rat& cap, const Rat& cost) {
    adj_[u].push_back({v, cap, cost, static_cast<int>(adj_[v].size())});
    adj_[v].push_back({u, Rat(0), -cost, static_cast<int>(adj_[u].size()) - 1});
  }

  // Successive shortest paths with potentials. All original costs are
  // nonnegative, so Dijkstra applies from the start.
  Rat min_cost_flow(int s, int t, const Rat& demand, std::vector<Rat>& potential) {
    const int n = static_cast<int>(adj_.size());
    potential.assign(n, Rat(0));
    Rat shipped = 0, total_cost = 0;
    while (shipped < demand) {
      std::vector<Rat> dist(n, Rat(0));
      std::vector<char> done(n, 0), reached(n, 0);
      std::vector<std::pair<int, int>> parent(n, {-1, -1});
      using Item = std::pair<Rat, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
      dist[s] = 0;
      reached[s] = 1;
      heap.push({Rat(0), s});
      while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (int k = 0; k < static_cast<int>(adj_[u].size()); ++k) {
          const Arc& a = adj_[u][k];
          if (a.cap <= 0 || done[a.to]) continue;
          Rat nd = du + a.cost + potential[u] - potential[a.to];
          if (!reached[a.to] || nd < dist[a.to]) {
            reached[a.to] = 1;
            dist[a.to] = nd;
            parent[a.to] = {u, k};
            heap.push({nd, a.to});
          }
        }
      }
      if (!reached[t]) throw Error("FlowInfeasible", "transport problem infeasible");
      for (int v = 0; v < n; ++v)
        if (reached[v]) potential[v] += dist[v];

      Rat push = demand - shipped;
      for (int v = t; v != s;) {
        auto [u, k] = parent[v];
        if (adj_[u][k].cap < push) push = adj_[u][k].cap;
        v = u;
      }
      for (int v = t; v != s;) {
        auto [u, k] = parent[v];
        Arc& a = adj_[u][k];
        a.cap -= push;
        adj_[v][a.rev].cap += push;
        total_cost += push * a.cost;
        v = u;
      }
      shipped += push;
    }
    return total_cost;
  }

private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

NormResult free_norm(const FiniteMetricSpace& space, const Molecule& x) {
  require_molecule(space, x);

  NormResult result;
  result.value = 0;
  for (const auto& p : space.points) result.witness.values[p] = 0;
  if (x.is_zero()) return result;

  std::vector<int> pos, neg;
  std::vector<Rat> mass;
  std::vector<int> node_of(space.size(), -1);
  Rat total = 0;
  for (const auto& [label, c] : x.coeffs) {
    int i = space.index_of(label);
    if (c > 0) {
      pos.push_back(i);
      total += c;
    } else {
      neg.push_back(i);
    }
  }
  const int np = static_cast<int>(pos.size()), nq = static_cast<int>(neg.size());
  // Nodes: 0 source, 1..np supplies, np+1..np+nq demands, last sink.
  FlowNet net(np + nq + 2);
  const int source = 0, sink = np + nq + 1;
  for (int a = 0; a < np; ++a) {
    node_of[pos[a]] = 1 + a;
    net.add_arc(source, 1 + a, x.coeffs.at(space.points[pos[a]]), Rat(0));
  }
  for (int b = 0; b < nq; ++b) {
    node_of[neg[b]] = 1 + np + b;
    net.add_arc(1 + np + b, sink, -x.coeffs.at(space.points[neg[b]]), Rat(0));
  }
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b)
      net.add_arc(1 + a, 1 + np + b, total, space.dist(pos[a], neg[b]));

  std::vector<Rat> potential;
  result.value = net.min_cost_flow(source, sink, total, potential);

  // Dual potentials give f = -pi on the support; the McShane-style closure
  // over the negative support is 1-Lipschitz on the whole space and attains
  // the optimum, which we assert.
  std::vector<Rat> f_neg(nq);
  for (int b = 0; b < nq; ++b) f_neg[b] = -potential[1 + np + b];
  for (int i = 0; i < space.size(); ++i) {
    Rat best;
    bool first = true;
    for (int b = 0; b < nq; ++b) {
      Rat cand = f_neg[b] + space.dist(i, neg[b]);
      if (first || cand < best) {
        best = cand;
        first = false;
      }
    }
    result.witness.values[space.points[i]] = best;
  }
  if (!result.witness.is_one_lipschitz(space) ||
      result.witness.evaluate(x) != result.value)
    throw Error("InternalError", "flow dual failed certification");
  return result;
}

Rat free_norm_dual_lp(const FiniteMetricSpace& space, const Molecule& x) {
  require_molecule(space, x);
  if (x.is_zero()) return Rat(0);

  std::vector<int> supp;
  std::vector<Rat> coeff;
  for (const auto& [label, c] : x.coeffs) {
    supp.push_back(space.index_of(label));
    coeff.push_back(c);
  }
  const int k = static_cast<int>(supp.size());
  // f(supp[0]) pinned to 0; variables are the remaining values.
  LinearProgram lp;
  lp.c.assign(k - 1, Rat(0));
  for (int i = 1; i < k; ++i) lp.c[i - 1] = coeff[i];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<Rat> row(k - 1, Rat(0));
      if (i > 0) row[i - 1] += 1;
      if (j > 0) row[j - 1] -= 1;
      lp.a.push_back(row);
      lp.b.push_back(space.dist(supp[i], supp[j]));
    }
  return maximize(lp).value;
}

}  // namespace freeiso
