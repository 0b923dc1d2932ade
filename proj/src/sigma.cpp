#include "freeiso/sigma.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace freeiso {
namespace {

// Undirected cycle views of the >=3-edge simple cycles: undirected edge ids
// plus one representative directed traversal.
struct UndCycle {
  std::vector<int> und_ids;
  std::vector<int> directed;
};

std::vector<UndCycle> und_cycle_views(const DirectedSymGraph& g, const CycleList& cl) {
  std::vector<UndCycle> out;
  std::set<std::vector<int>> seen;
  for (const SimpleCycle& c : cl.cycles) {
    std::vector<int> und;
    for (int e : c.edge_ids) und.push_back(g.und_of[e]);
    std::sort(und.begin(), und.end());
    if (!seen.insert(und).second) continue;
    out.push_back({und, c.edge_ids});
  }
  return out;
}

std::vector<Rat> shortest_path_tree(const DirectedSymGraph& g, const std::vector<Rat>& w,
                                    int start, std::vector<int>& parent_edge) {
  const int n = g.vertex_count();
  std::vector<Rat> dist(n, Rat(0));
  std::vector<char> reached(n, 0), done(n, 0);
  parent_edge.assign(n, -1);
  using Item = std::pair<Rat, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[start] = 0;
  reached[start] = 1;
  heap.push({Rat(0), start});
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int id : g.out[u]) {
      int v = g.edges[id].second;
      Rat nd = du + w[id];
      if (!reached[v] || nd < dist[v]) {
        reached[v] = 1;
        dist[v] = nd;
        parent_edge[v] = id;
        heap.push({nd, v});
      }
    }
  }
  return dist;
}

std::vector<int> path_edges(const DirectedSymGraph& g, const std::vector<int>& parent_edge,
                            int from, int to) {
  // parent_edge comes from a tree rooted at `from`; edges are returned in
  // travel order from -> to.
  std::vector<int> rev;
  for (int v = to; v != from;) {
    int id = parent_edge[v];
    if (id < 0) throw Error("NotConnected", "no path in extreme graph");
    rev.push_back(id);
    v = g.edges[id].first;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Molecule mapped_path_sum(const FiniteMetricSpace& m2, const ExtGraph& e1,
                         const ExtGraph& e2, const SignedEdgeBijection& sigma,
                         const std::vector<int>& edges_on_path) {
  Molecule sum;
  for (int e : edges_on_path) {
    int f = sigma.img[e];
    auto [s, r] = e2.g.edges[f];
    Rat scale = e1.weight[e] / e2.weight[f];
    sum.add(m2.points[e2.point_of[s]], scale);
    sum.add(m2.points[e2.point_of[r]], -scale);
  }
  return sum;
}

}  // namespace

ConditionReport check_conditions(const FiniteMetricSpace& m1, const ExtGraph& e1,
                                 const FiniteMetricSpace& m2, const ExtGraph& e2,
                                 const SignedEdgeBijection& sigma, SigmaMode mode,
                                 CycleCaps caps, Comparator cmp) {
  ConditionReport report;
  if (static_cast<int>(sigma.img.size()) != e1.g.edge_count() ||
      e1.g.edge_count() != e2.g.edge_count()) {
    report.detail = "sigma is not a bijection between the edge sets";
    return report;
  }
  CycleList c1 = simple_cycles(e1.g, 3, caps);
  CycleList c2 = simple_cycles(e2.g, 3, caps);
  if (!c1.complete || !c2.complete)
    throw Error("CycleListIncomplete", "cycle enumeration was capped");

  SignedEdgeBijection inv = inverse(sigma);
  report.sa = true;
  for (const SimpleCycle& c : c1.cycles) {
    std::vector<int> img;
    for (int e : c.edge_ids) img.push_back(sigma.img[e]);
    if (!is_simple_directed_cycle(e2.g, img)) {
      report.sa = false;
      report.detail = "a simple cycle maps to a non-cycle";
      break;
    }
  }
  if (report.sa)
    for (const SimpleCycle& c : c2.cycles) {
      std::vector<int> pre;
      for (int e : c.edge_ids) pre.push_back(inv.img[e]);
      if (!is_simple_directed_cycle(e1.g, pre)) {
        report.sa = false;
        report.detail = "a simple cycle pulls back to a non-cycle";
        break;
      }
    }

  report.sb = true;
  for (const SimpleCycle& c : c1.cycles) {
    bool first = true;
    Rat ratio;
    for (int e : c.edge_ids) {
      Rat r = e1.weight[e] / e2.weight[sigma.img[e]];
      if (first) {
        ratio = r;
        first = false;
      } else if (cmp.exact ? (r != ratio) : !cmp.equal(r, ratio)) {
        report.sb = false;
        report.detail = "weight ratio varies along a simple cycle";
        break;
      }
    }
    if (!report.sb) break;
  }

  if (!report.sa || !report.sb || mode == SigmaMode::SaSb) return report;

  // (Sc): with (Sa)+(Sb) in hand the mapped path sum is path independent, so
  // one shortest path per ordered pair decides it; checked for sigma and its
  // inverse.
  report.sc = ScStatus::Pass;
  auto direction = [&](const FiniteMetricSpace& ma, const ExtGraph& ea,
                       const FiniteMetricSpace& mb, const ExtGraph& eb,
                       const SignedEdgeBijection& s) -> bool {
    for (int x = 0; x < ea.g.vertex_count(); ++x) {
      std::vector<int> parent;
      shortest_path_tree(ea.g, ea.weight, x, parent);
      for (int y = 0; y < ea.g.vertex_count(); ++y) {
        if (x == y) continue;
        Molecule sum = mapped_path_sum(mb, ea, eb, s, path_edges(ea.g, parent, x, y));
        Rat norm = free_norm(mb, sum).value;
        Rat expect = ma.dist(ea.point_of[x], ea.point_of[y]);
        if (!cmp.equal(norm, expect)) return false;
      }
    }
    return true;
  };
  if (!direction(m1, e1, m2, e2, sigma) || !direction(m2, e2, m1, e1, inv)) {
    report.sc = ScStatus::Fail;
    report.detail = "a mapped path sum misses the distance";
  }
  return report;
}

Molecule apply_sigma(const FiniteMetricSpace& m1, const ExtGraph& e1,
                     const FiniteMetricSpace& m2, const ExtGraph& e2,
                     const SignedEdgeBijection& sigma, const Molecule& x) {
  ConditionReport report =
      check_conditions(m1, e1, m2, e2, sigma, SigmaMode::SaSb);
  if (!report.pass(SigmaMode::SaSb))
    throw Error("ConditionsNotVerified", "sigma fails (Sa)/(Sb): " + report.detail);
  for (const auto& [label, c] : x.coeffs) {
    (void)c;
    if (e1.g.find(label) < 0)
      throw Error("SupportOutsideVext", "point \"" + label + "\" not in the extreme graph");
  }
  if (x.is_zero()) return {};

  std::vector<int> parent;
  shortest_path_tree(e1.g, e1.weight, 0, parent);
  Molecule out;
  for (const auto& [label, c] : x.coeffs) {
    int v = e1.g.vertex_index(label);
    if (v == 0) continue;
    // delta_v - delta_base = sum of d(e) m_e along any path; map each m_e.
    Molecule chain =
        mapped_path_sum(m2, e1, e2, sigma, path_edges(e1.g, parent, 0, v));
    out = out + chain * Rat(-c);  // path goes base -> v, so negate
  }
  return out;
}

namespace {

struct Backtracker {
  const DirectedSymGraph& g1;
  const std::vector<Rat>& w1;
  const DirectedSymGraph& g2;
  const std::vector<Rat>& w2;
  std::vector<UndCycle> cycles;
  std::vector<std::vector<int>> check_at;  // und edge -> cycles completed there
  std::vector<int> und_img;                // und id -> und id in g2
  std::vector<int> orient;                 // und id -> 0/1
  std::vector<char> used;
  long long nodes = 0, budget = 0;
  bool stop_first = false;
  std::vector<SignedEdgeBijection> out;

  Backtracker(const DirectedSymGraph& a, const std::vector<Rat>& wa,
              const DirectedSymGraph& b, const std::vector<Rat>& wb)
      : g1(a), w1(wa), g2(b), w2(wb) {}

  int directed_image(int e) const {
    int k = g1.und_of[e];
    int fwd = g1.und_fwd[k];
    int img_fwd = orient[k] == 0 ? g2.und_fwd[und_img[k]] : g2.twin[g2.und_fwd[und_img[k]]];
    return e == fwd ? img_fwd : g2.twin[img_fwd];
  }

  bool cycle_ok(const UndCycle& c) const {
    std::vector<int> img;
    img.reserve(c.directed.size());
    for (int e : c.directed) img.push_back(directed_image(e));
    if (!is_simple_directed_cycle(g2, img)) return false;
    Rat ratio;
    bool first = true;
    for (size_t i = 0; i < c.directed.size(); ++i) {
      Rat r = w1[c.directed[i]] / w2[img[i]];
      if (first) {
        ratio = r;
        first = false;
      } else if (r != ratio) {
        return false;
      }
    }
    return true;
  }

  bool search(int k) {
    if (++nodes > budget) throw Error("SearchCapExceeded", "sigma search budget exhausted");
    if (k == g1.und_count()) {
      SignedEdgeBijection s;
      s.img.resize(g1.edge_count());
      for (int e = 0; e < g1.edge_count(); ++e) s.img[e] = directed_image(e);
      out.push_back(std::move(s));
      return stop_first;
    }
    for (int t = 0; t < g2.und_count(); ++t) {
      if (used[t]) continue;
      for (int o = 0; o < 2; ++o) {
        und_img[k] = t;
        orient[k] = o;
        used[t] = 1;
        bool ok = true;
        for (int ci : check_at[k])
          if (!cycle_ok(cycles[ci])) {
            ok = false;
            break;
          }
        if (ok && search(k + 1)) return true;
        used[t] = 0;
      }
    }
    return false;
  }
};

std::vector<SignedEdgeBijection> run_backtracker(const DirectedSymGraph& g1,
                                                 const std::vector<Rat>& w1,
                                                 const DirectedSymGraph& g2,
                                                 const std::vector<Rat>& w2,
                                                 SearchCaps caps, bool stop_first) {
  if (g1.und_count() != g2.und_count() || g1.vertex_count() != g2.vertex_count())
    return {};
  CycleList c1 = simple_cycles(g1, 3, caps.cycles);
  CycleList c2 = simple_cycles(g2, 3, caps.cycles);
  if (!c1.complete || !c2.complete)
    throw Error("CycleListIncomplete", "cycle enumeration was capped");
  // Forward checks plus equal census give (Sa) as an equivalence.
  if (c1.cycles.size() != c2.cycles.size()) return {};

  Backtracker bt(g1, w1, g2, w2);
  bt.cycles = und_cycle_views(g1, c1);
  bt.check_at.assign(std::max(g1.und_count(), 1), {});
  for (int ci = 0; ci < static_cast<int>(bt.cycles.size()); ++ci) {
    int last = *std::max_element(bt.cycles[ci].und_ids.begin(), bt.cycles[ci].und_ids.end());
    bt.check_at[last].push_back(ci);
  }
  bt.und_img.assign(g1.und_count(), -1);
  bt.orient.assign(g1.und_count(), 0);
  bt.used.assign(g2.und_count(), 0);
  bt.budget = caps.max_nodes;
  bt.stop_first = stop_first;
  if (g1.und_count() > 0) bt.search(0);
  std::sort(bt.out.begin(), bt.out.end());
  return bt.out;
}

}  // namespace

SigmaEnumeration enumerate_sigma(const FiniteMetricSpace& space, SigmaMode mode,
                                 SearchCaps caps) {
  PragueVerdict verdict = classify_prague(space);
  if (verdict.cls == PragueClass::NotWeakPrague)
    throw Error("NotWeakPrague", verdict.diagnostics);
  if (verdict.cls == PragueClass::WeakPragueOnly && mode == SigmaMode::SaSb)
    throw Error("ModeRequiresSc", "weak Prague input needs the SaSbSc mode");

  SigmaEnumeration result;
  result.ext = ext_graph(space);
  result.sigmas = run_backtracker(result.ext.g, result.ext.weight, result.ext.g,
                                  result.ext.weight, caps, false);
  if (mode == SigmaMode::SaSbSc) {
    std::vector<SignedEdgeBijection> kept;
    for (auto& s : result.sigmas) {
      ConditionReport rep = check_conditions(space, result.ext, space, result.ext, s,
                                             SigmaMode::SaSbSc, caps.cycles);
      if (rep.pass(SigmaMode::SaSbSc)) kept.push_back(std::move(s));
    }
    result.sigmas = std::move(kept);
  }
  return result;
}

std::optional<SignedEdgeBijection> find_sigma_between(const DirectedSymGraph& g1,
                                                      const std::vector<Rat>& w1,
                                                      const DirectedSymGraph& g2,
                                                      const std::vector<Rat>& w2,
                                                      SearchCaps caps) {
  auto found = run_backtracker(g1, w1, g2, w2, caps, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

namespace {

// Builds a witness from a candidate vertex map of the extreme graph: reads
// the sign off one edge, then verifies it globally along with the isometry
// property of the induced point map.
std::optional<RigidityWitness> witness_from_vertex_map(const FiniteMetricSpace& space,
                                                       const ExtGraph& ext,
                                                       const SignedEdgeBijection& sigma,
                                                       const std::vector<int>& f) {
  const DirectedSymGraph& g = ext.g;
  if (g.und_count() == 0) return std::nullopt;
  int fwd0 = g.und_fwd[0];
  auto [u, v] = g.edges[fwd0];
  int eps;
  if (sigma.img[fwd0] == g.edge_index(f[u], f[v]))
    eps = 1;
  else if (sigma.img[fwd0] == g.edge_index(f[v], f[u]))
    eps = -1;
  else
    return std::nullopt;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [p, q] = g.edges[e];
    int want = eps == 1 ? g.edge_index(f[p], f[q]) : g.edge_index(f[q], f[p]);
    if (want < 0 || sigma.img[e] != want) return std::nullopt;
  }
  std::vector<int> point_map(space.size());
  for (int gv = 0; gv < g.vertex_count(); ++gv)
    point_map[ext.point_of[gv]] = ext.point_of[f[gv]];
  if (!is_isometry(space, point_map)) return std::nullopt;
  return RigidityWitness{sigma, eps, point_map};
}

}  // namespace

std::optional<RigidityWitness> factor_sigma(const FiniteMetricSpace& space,
                                            const ExtGraph& ext,
                                            const SignedEdgeBijection& sigma) {
  const DirectedSymGraph& g = ext.g;
  if (g.vertex_count() != space.size())
    throw Error("SupportOutsideVext", "extreme graph does not cover the space");
  if (!is_connected(g)) throw Error("NotConnected", "extreme graph is disconnected");
  if (g.und_count() == 0) return std::nullopt;

  std::vector<int> und_img(g.und_count());
  for (int k = 0; k < g.und_count(); ++k) und_img[k] = g.und_of[sigma.img[g.und_fwd[k]]];

  auto [a0, b0] = g.und_pair(0);
  auto [c0, d0] = g.und_pair(und_img[0]);
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<int> f(g.vertex_count(), -1);
    f[a0] = flip ? d0 : c0;
    f[b0] = flip ? c0 : d0;
    std::queue<int> bfs;
    bfs.push(a0);
    bfs.push(b0);
    bool ok = true;
    while (!bfs.empty() && ok) {
      int v = bfs.front();
      bfs.pop();
      for (int id : g.out[v]) {
        int w = g.edges[id].second;
        auto [x, y] = g.und_pair(und_img[g.und_of[id]]);
        int fw;
        if (f[v] == x)
          fw = y;
        else if (f[v] == y)
          fw = x;
        else {
          ok = false;
          break;
        }
        if (f[w] < 0) {
          f[w] = fw;
          bfs.push(w);
        } else if (f[w] != fw) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : f) {
      if (v < 0 || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = 1;
    }
    if (!ok) continue;
    if (auto w = witness_from_vertex_map(space, ext, sigma, f)) return w;
  }
  return std::nullopt;
}

RigidityVerdict decide_rigidity(const FiniteMetricSpace& space, RigidityOptions opts) {
  PragueVerdict verdict = classify_prague(space);
  if (verdict.cls == PragueClass::NotWeakPrague)
    throw Error("NotWeakPrague", verdict.diagnostics);
  SigmaMode mode = verdict.cls == PragueClass::Prague ? SigmaMode::SaSb : SigmaMode::SaSbSc;

  ExtGraph ext = ext_graph(space);
  RigidityVerdict out;
  out.via_three_connected = is_3_connected(ext.g);

  if (ext.g.und_count() > opts.witness_edge_limit) {
    if (out.via_three_connected) {
      // Whitney fast path: every cycle-preserving bijection is induced by a
      // vertex map with a globally coherent sign, so the space is rigid.
      out.rigid = true;
      return out;
    }
    throw Error("SearchCapExceeded",
                "extreme graph too large to enumerate and not 3-connected");
  }

  SigmaEnumeration en = enumerate_sigma(space, mode, opts.caps);
  out.sigma_count = static_cast<long long>(en.sigmas.size());
  CycleList cycles = simple_cycles(ext.g, 3, opts.caps.cycles);
  out.rigid = true;
  for (const auto& s : en.sigmas) {
    std::optional<RigidityWitness> w;
    if (out.via_three_connected) {
      // Fast path per sigma: vertex map from star reconstruction, sign read
      // off one edge and verified globally.
      std::vector<int> f = reconstruct_vertex_map(ext.g, s, cycles);
      w = witness_from_vertex_map(space, ext, s, f);
    } else {
      w = factor_sigma(space, ext, s);
    }
    if (w) {
      out.witnesses.push_back(std::move(*w));
    } else {
      out.rigid = false;
      if (!out.counterexample) out.counterexample = s;
    }
  }
  return out;
}

}  // namespace freeiso
