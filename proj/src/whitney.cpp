#include "freeiso/whitney.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace freeiso {

SignedEdgeBijection identity_bijection(const DirectedSymGraph& g) {
  SignedEdgeBijection s;
  s.img.resize(g.edge_count());
  std::iota(s.img.begin(), s.img.end(), 0);
  return s;
}

SignedEdgeBijection negated_identity(const DirectedSymGraph& g) {
  SignedEdgeBijection s;
  s.img = g.twin;
  return s;
}

SignedEdgeBijection inverse(const SignedEdgeBijection& s) {
  SignedEdgeBijection out;
  out.img.resize(s.img.size());
  for (int e = 0; e < static_cast<int>(s.img.size()); ++e) out.img[s.img[e]] = e;
  return out;
}

SignedEdgeBijection compose(const SignedEdgeBijection& a, const SignedEdgeBijection& b) {
  SignedEdgeBijection out;
  out.img.resize(a.img.size());
  for (int e = 0; e < static_cast<int>(a.img.size()); ++e) out.img[e] = b.img[a.img[e]];
  return out;
}

SignedEdgeBijection from_vertex_map(const DirectedSymGraph& g, const std::vector<int>& f) {
  SignedEdgeBijection s;
  s.img.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    int id = g.edge_index(f[u], f[v]);
    if (id < 0) throw Error("NotAnIsomorphism", "vertex map does not preserve edges");
    s.img[e] = id;
  }
  return s;
}

bool is_signed_bijection(const DirectedSymGraph& g, const SignedEdgeBijection& s) {
  if (static_cast<int>(s.img.size()) != g.edge_count()) return false;
  std::vector<char> hit(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    int to = s.img[e];
    if (to < 0 || to >= g.edge_count() || hit[to]) return false;
    hit[to] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (s.img[g.twin[e]] != g.twin[s.img[e]]) return false;
  return true;
}

bool is_cycle_preserving(const DirectedSymGraph& g, const SignedEdgeBijection& sigma,
                         const CycleList& cycles) {
  if (!cycles.complete)
    throw Error("IncompleteCycleList", "cycle enumeration was capped");
  SignedEdgeBijection inv = inverse(sigma);
  for (const SimpleCycle& c : cycles.cycles) {
    std::vector<int> fwd, bwd;
    fwd.reserve(c.edge_ids.size());
    bwd.reserve(c.edge_ids.size());
    for (int e : c.edge_ids) {
      fwd.push_back(sigma.img[e]);
      bwd.push_back(inv.img[e]);
    }
    if (!is_simple_directed_cycle(g, fwd) || !is_simple_directed_cycle(g, bwd))
      return false;
  }
  return true;
}

std::vector<int> vertex_star_complement(const DirectedSymGraph& g, int v) {
  std::vector<int> out;
  for (int k = 0; k < g.und_count(); ++k) {
    auto [a, b] = g.und_pair(k);
    if (a != v && b != v) out.push_back(k);
  }
  return out;
}

namespace {

// Fundamental-cycle swaps of one spanning forest, plus seeded random forests.
std::vector<std::vector<int>> sample_bases(const DirectedSymGraph& g,
                                           const std::vector<int>& und_ids,
                                           const StarCheckOptions& opts) {
  std::vector<std::vector<int>> bases;
  std::vector<int> base = extend_to_basis(g, und_ids);
  bases.push_back(base);
  std::set<int> in_base(base.begin(), base.end());
  for (int extra : und_ids) {
    if (in_base.count(extra)) continue;
    for (size_t t = 0; t < base.size(); ++t) {
      std::vector<int> cand = base;
      cand[t] = extra;
      std::sort(cand.begin(), cand.end());
      // Same size as a basis of E', so acyclic already means spanning forest.
      if (!contains_cycle(g, cand)) bases.push_back(cand);
    }
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<int> shuffled = und_ids;
  for (int r = 0; r < opts.random_bases; ++r) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    bases.push_back(extend_to_basis(g, shuffled));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

void all_bases_rec(const DirectedSymGraph& g, const std::vector<int>& und_ids, size_t from,
                   std::vector<int>& cur, int need, std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(cur);
    return;
  }
  if (und_ids.size() - from < static_cast<size_t>(need)) return;
  for (size_t i = from; i < und_ids.size(); ++i) {
    cur.push_back(und_ids[i]);
    if (!contains_cycle(g, cur)) all_bases_rec(g, und_ids, i + 1, cur, need - 1, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_vertex_star_complement(const DirectedSymGraph& g, const std::vector<int>& und_ids,
                               const StarCheckOptions& opts) {
  if (static_cast<int>(und_ids.size()) >= g.und_count())
    throw Error("NotProperSubset", "E' must be a proper subset of the edges");
  if (und_ids.empty()) return false;
  if (!opts.two_connected_variant && !is_2_connected(g))
    throw Error("GraphNot2Connected", "the ambient graph must be 2-connected");

  Subgraph sub = spanned_subgraph(g, und_ids);
  if (opts.two_connected_variant) {
    // Every two edges of E' must share a simple cycle inside E'.
    CycleList cl = simple_cycles(sub.graph, 3);
    const int m = sub.graph.und_count();
    std::vector<std::vector<char>> related(m, std::vector<char>(m, 0));
    for (const SimpleCycle& c : cl.cycles) {
      std::vector<int> und;
      for (int e : c.edge_ids) und.push_back(sub.graph.und_of[e]);
      for (int a : und)
        for (int b : und) related[a][b] = 1;
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (!related[a][b]) return false;
  } else {
    if (!is_connected(sub.graph)) return false;
  }

  std::vector<std::vector<int>> bases;
  if (opts.exhaustive) {
    if (und_ids.size() > 12)
      throw Error("TooLarge", "exhaustive basis enumeration is limited to 12 edges");
    std::vector<int> sorted = und_ids;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> cur;
    all_bases_rec(g, sorted, 0, cur, edge_rank(g, sorted), bases);
  } else {
    bases = sample_bases(g, und_ids, opts);
  }

  std::set<int> inside(und_ids.begin(), und_ids.end());
  std::vector<int> all(g.und_count());
  std::iota(all.begin(), all.end(), 0);
  const int full_rank = edge_rank(g, all);
  for (const auto& basis : bases) {
    for (int e = 0; e < g.und_count(); ++e) {
      if (inside.count(e)) continue;
      std::vector<int> cand = basis;
      cand.push_back(e);
      if (contains_cycle(g, cand)) return false;
      if (static_cast<int>(cand.size()) != full_rank) return false;
    }
  }
  return true;
}

std::vector<int> reconstruct_vertex_map(const DirectedSymGraph& g,
                                        const SignedEdgeBijection& sigma,
                                        const CycleList& cycles) {
  if (!is_3_connected(g)) throw Error("Not3Connected", "graph must be 3-connected");
  if (!is_cycle_preserving(g, sigma, cycles))
    throw Error("NotCyclePreserving", "sigma does not preserve simple cycles");

  const int n = g.vertex_count();
  std::vector<std::set<int>> star(n);
  for (int v = 0; v < n; ++v) {
    auto s = vertex_star_complement(g, v);
    star[v] = std::set<int>(s.begin(), s.end());
  }
  std::vector<int> f(n, -1);
  std::vector<char> taken(n, 0);
  for (int v = 0; v < n; ++v) {
    std::set<int> image;
    for (int k : star[v]) image.insert(g.und_of[sigma.img[g.und_fwd[k]]]);
    int match = -1;
    for (int w = 0; w < n; ++w)
      if (!taken[w] && star[w] == image) {
        match = w;
        break;
      }
    if (match < 0)
      throw Error("NoConsistentVertexMap", "sigma image of a vertex star is not a star");
    f[v] = match;
    taken[match] = 1;
  }
  for (int k = 0; k < g.und_count(); ++k) {
    auto [u, v] = g.und_pair(k);
    int img = g.und_of[sigma.img[g.und_fwd[k]]];
    auto [a, b] = g.und_pair(img);
    if (!((f[u] == a && f[v] == b) || (f[u] == b && f[v] == a)))
      throw Error("NoConsistentVertexMap", "reconstructed map misses an edge image");
  }
  // f preserves adjacency in both directions: edges map onto edges (above)
  // and f is a bijection, so the reconstructed map is a graph isomorphism.
  return f;
}

}  // namespace freeiso
