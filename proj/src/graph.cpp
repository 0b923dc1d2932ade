#include "freeiso/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace freeiso {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int DirectedSymGraph::vertex_index(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices[i] == label) return i;
  throw Error("UnknownLabel", "unknown vertex \"" + label + "\"");
}

int DirectedSymGraph::edge_index(int u, int v) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

std::pair<int, int> DirectedSymGraph::und_pair(int und_id) const {
  return edges[und_fwd[und_id]];
}

DirectedSymGraph make_graph_indexed(int n, const std::vector<std::string>& labels,
                                    const std::vector<std::pair<int, int>>& und_edges) {
  DirectedSymGraph g;
  g.vertices = labels;
  std::set<std::pair<int, int>> directed;
  for (auto [u, v] : und_edges) {
    if (u == v) throw Error("LoopEdge", "loops are not allowed");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("UnknownLabel", "edge endpoint out of range");
    directed.insert({u, v});
    directed.insert({v, u});
  }
  g.edges.assign(directed.begin(), directed.end());
  g.twin.resize(g.edges.size());
  g.und_of.resize(g.edges.size());
  g.adj.assign(n, {});
  g.out.assign(n, {});
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edges[id];
    g.twin[id] = g.edge_index(v, u);
    g.out[u].push_back(id);
    if (u < v) {
      g.und_of[id] = static_cast<int>(g.und_fwd.size());
      g.und_fwd.push_back(id);
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [u, v] = g.edges[id];
    if (u > v) g.und_of[id] = g.und_of[g.twin[id]];
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

DirectedSymGraph make_graph(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& und_edges) {
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size())
    throw Error("DuplicateLabel", "vertex labels are not pairwise distinct");
  DirectedSymGraph lookup;
  lookup.vertices = vertices;
  std::vector<std::pair<int, int>> idx_edges;
  for (const auto& [a, b] : und_edges)
    idx_edges.push_back({lookup.vertex_index(a), lookup.vertex_index(b)});
  return make_graph_indexed(static_cast<int>(vertices.size()), vertices, idx_edges);
}

Subgraph spanned_subgraph(const DirectedSymGraph& g, const std::vector<int>& und_ids) {
  std::set<int> verts;
  for (int k : und_ids) {
    auto [u, v] = g.und_pair(k);
    verts.insert(u);
    verts.insert(v);
  }
  Subgraph out;
  out.vertex_back.assign(verts.begin(), verts.end());
  std::vector<int> fwd(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < static_cast<int>(out.vertex_back.size()); ++i) {
    fwd[out.vertex_back[i]] = i;
    labels.push_back(g.vertices[out.vertex_back[i]]);
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> sorted_ids(und_ids.begin(), und_ids.end());
  std::sort(sorted_ids.begin(), sorted_ids.end());
  sorted_ids.erase(std::unique(sorted_ids.begin(), sorted_ids.end()), sorted_ids.end());
  for (int k : sorted_ids) {
    auto [u, v] = g.und_pair(k);
    edges.push_back({fwd[u], fwd[v]});
  }
  out.graph = make_graph_indexed(static_cast<int>(labels.size()), labels, edges);
  // make_graph_indexed sorts undirected edges by (min,max) pairs, which is
  // the same order as sorted original ids within a spanned subgraph only up
  // to relabeling; rebuild the back map explicitly.
  out.und_back.assign(out.graph.und_count(), -1);
  for (int k : sorted_ids) {
    auto [u, v] = g.und_pair(k);
    int id = out.graph.edge_index(std::min(fwd[u], fwd[v]), std::max(fwd[u], fwd[v]));
    out.und_back[out.graph.und_of[id]] = k;
  }
  return out;
}

std::vector<int> SimpleCycle::sorted_ids() const {
  std::vector<int> ids = edge_ids;
  std::sort(ids.begin(), ids.end());
  return ids;
}

namespace {

SimpleCycle canonical_cycle(std::vector<int> ids) {
  auto min_it = std::min_element(ids.begin(), ids.end());
  std::rotate(ids.begin(), min_it, ids.end());
  return SimpleCycle{std::move(ids)};
}

// Enumerates undirected simple cycles with the classic smallest-root scheme:
// the root is the minimal vertex of the cycle and the orientation with
// path[1] < path.back() is kept, so each vertex cycle appears once.
void und_cycles(const DirectedSymGraph& g, int max_len, long long max_count,
                std::vector<std::vector<int>>& out, bool& complete) {
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  for (int root = 0; root < n && complete; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    // Iterative DFS over neighbor iterators.
    std::vector<size_t> iter{0};
    while (!iter.empty()) {
      int u = path.back();
      if (iter.back() < g.adj[u].size()) {
        int v = g.adj[u][iter.back()++];
        if (v == root && path.size() >= 3 && path[1] < path.back()) {
          out.push_back(path);
          if (static_cast<long long>(out.size()) >= max_count) {
            complete = false;
            break;
          }
          continue;
        }
        if (v <= root || on_path[v]) continue;
        if (static_cast<int>(path.size()) >= max_len) continue;
        path.push_back(v);
        on_path[v] = 1;
        iter.push_back(0);
      } else {
        on_path[u] = 0;
        path.pop_back();
        iter.pop_back();
      }
    }
    for (int v : path) on_path[v] = 0;
  }
}

}  // namespace

CycleList simple_cycles(const DirectedSymGraph& g, int min_len, CycleCaps caps) {
  if (min_len < 2) throw Error("BadArgument", "min_len must be at least 2");
  int max_len = caps.max_len < 0 ? g.vertex_count() : caps.max_len;
  CycleList result;
  if (min_len == 2 && max_len >= 2) {
    for (int k = 0; k < g.und_count(); ++k) {
      int fwd = g.und_fwd[k];
      result.cycles.push_back(canonical_cycle({fwd, g.twin[fwd]}));
    }
  }
  std::vector<std::vector<int>> vertex_cycles;
  und_cycles(g, max_len, caps.max_count, vertex_cycles, result.complete);
  for (const auto& vc : vertex_cycles) {
    const int k = static_cast<int>(vc.size());
    if (k < std::max(min_len, 3)) continue;
    std::vector<int> fwd(k), rev(k);
    for (int i = 0; i < k; ++i) {
      fwd[i] = g.edge_index(vc[i], vc[(i + 1) % k]);
      rev[i] = g.edge_index(vc[(i + 1) % k], vc[i]);
    }
    std::reverse(rev.begin(), rev.end());
    result.cycles.push_back(canonical_cycle(std::move(fwd)));
    result.cycles.push_back(canonical_cycle(std::move(rev)));
  }
  std::sort(result.cycles.begin(), result.cycles.end());
  return result;
}

bool is_simple_directed_cycle(const DirectedSymGraph& g, const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::set<int> distinct(edge_ids.begin(), edge_ids.end());
  if (distinct.size() != edge_ids.size()) return false;
  std::map<int, int> next;  // source vertex -> edge id
  for (int id : edge_ids) {
    auto [u, v] = g.edges[id];
    (void)v;
    if (!next.emplace(u, id).second) return false;  // repeated source vertex
  }
  // Walk from an arbitrary edge; a simple cycle visits every edge once.
  int start = *distinct.begin();
  int at = g.edges[start].second;
  size_t steps = 1;
  while (at != g.edges[start].first) {
    auto it = next.find(at);
    if (it == next.end()) return false;
    at = g.edges[it->second].second;
    if (++steps > edge_ids.size()) return false;
  }
  return steps == edge_ids.size();
}

bool is_connected(const DirectedSymGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int count = 1;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int v : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        bfs.push(v);
      }
  }
  return count == n;
}

namespace {

// Unit-capacity max-flow on the vertex-split network; returns the number of
// internally disjoint paths from s to t (s, t not adjacent).
int disjoint_paths(const DirectedSymGraph& g, int s, int t, std::vector<int>* cut) {
  const int n = g.vertex_count();
  const int big = n + 1;
  // Node 2v = v_in, 2v+1 = v_out.
  struct A {
    int to, cap, rev;
  };
  std::vector<std::vector<A>> adj(2 * n);
  auto add = [&](int u, int v, int cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (int k = 0; k < g.und_count(); ++k) {
    auto [u, v] = g.und_pair(k);
    add(2 * u + 1, 2 * v, big);
    add(2 * v + 1, 2 * u, big);
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> parent(2 * n, {-1, -1});
    std::queue<int> bfs;
    bfs.push(source);
    parent[source] = {source, -1};
    while (!bfs.empty() && parent[sink].first < 0) {
      int u = bfs.front();
      bfs.pop();
      for (int k = 0; k < static_cast<int>(adj[u].size()); ++k)
        if (adj[u][k].cap > 0 && parent[adj[u][k].to].first < 0) {
          parent[adj[u][k].to] = {u, k};
          bfs.push(adj[u][k].to);
        }
    }
    if (parent[sink].first < 0) break;
    for (int v = sink; v != source;) {
      auto [u, k] = parent[v];
      adj[u][k].cap -= 1;
      adj[v][adj[u][k].rev].cap += 1;
      v = u;
    }
    ++flow;
  }
  if (cut) {
    std::vector<char> reach(2 * n, 0);
    std::queue<int> bfs;
    bfs.push(source);
    reach[source] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (const A& a : adj[u])
        if (a.cap > 0 && !reach[a.to]) {
          reach[a.to] = 1;
          bfs.push(a.to);
        }
    }
    cut->clear();
    for (int v = 0; v < n; ++v)
      if (reach[2 * v] && !reach[2 * v + 1]) cut->push_back(v);
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const DirectedSymGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  bool any_pair = false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (std::binary_search(g.adj[u].begin(), g.adj[u].end(), v)) continue;
      any_pair = true;
      best = std::min(best, disjoint_paths(g, u, v, nullptr));
    }
  return any_pair ? best : n - 1;
}

std::vector<int> minimum_vertex_cut(const DirectedSymGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> best_cut;
  int best = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (std::binary_search(g.adj[u].begin(), g.adj[u].end(), v)) continue;
      std::vector<int> cut;
      int f = disjoint_paths(g, u, v, &cut);
      if (f < best) {
        best = f;
        best_cut = cut;
      }
    }
  return best_cut;
}

bool is_2_connected(const DirectedSymGraph& g) { return vertex_connectivity(g) >= 2; }
bool is_3_connected(const DirectedSymGraph& g) { return vertex_connectivity(g) >= 3; }

namespace {

struct BlockState {
  const DirectedSymGraph& g;
  std::vector<int> disc, low;
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  explicit BlockState(const DirectedSymGraph& g_) : g(g_) {
    disc.assign(g.vertex_count(), 0);
    low.assign(g.vertex_count(), 0);
  }

  void dfs(int u, int parent_edge) {
    disc[u] = low[u] = ++timer;
    for (int id : g.out[u]) {
      int k = g.und_of[id];
      int v = g.edges[id].second;
      if (k == parent_edge) continue;
      if (!disc[v]) {
        edge_stack.push_back(k);
        dfs(v, k);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<int> block;
          while (true) {
            int top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == k) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back(k);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> edge_components(const DirectedSymGraph& g) {
  BlockState state(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!state.disc[v]) state.dfs(v, -1);
  std::sort(state.blocks.begin(), state.blocks.end());
  return state.blocks;
}

bool contains_cycle(const DirectedSymGraph& g, const std::vector<int>& und_ids) {
  UnionFind uf(g.vertex_count());
  for (int k : und_ids) {
    auto [u, v] = g.und_pair(k);
    if (!uf.unite(u, v)) return true;
  }
  return false;
}

int edge_rank(const DirectedSymGraph& g, const std::vector<int>& und_ids) {
  UnionFind uf(g.vertex_count());
  int rank = 0;
  for (int k : und_ids) {
    auto [u, v] = g.und_pair(k);
    if (uf.unite(u, v)) ++rank;
  }
  return rank;
}

bool is_basis(const DirectedSymGraph& g, const std::vector<int>& und_ids) {
  std::vector<int> all(g.und_count());
  std::iota(all.begin(), all.end(), 0);
  return !contains_cycle(g, und_ids) &&
         static_cast<int>(und_ids.size()) == edge_rank(g, all);
}

std::vector<int> extend_to_basis(const DirectedSymGraph& g, const std::vector<int>& und_ids) {
  UnionFind uf(g.vertex_count());
  std::vector<int> basis;
  for (int k : und_ids) {
    auto [u, v] = g.und_pair(k);
    if (uf.unite(u, v)) basis.push_back(k);
  }
  return basis;
}

bool has_unoriented_cycle(const DirectedSymGraph& g, const std::vector<int>& edge_ids) {
  std::set<int> ids(edge_ids.begin(), edge_ids.end());
  for (int id : edge_ids)
    if (ids.count(g.twin[id]))
      throw Error("OppositePairPresent", "edge list contains e and -e");
  UnionFind uf(g.vertex_count());
  for (int id : edge_ids) {
    auto [u, v] = g.edges[id];
    if (!uf.unite(u, v)) return true;
  }
  return false;
}

int molecule_rank(const FiniteMetricSpace& space,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<Rat>> rows;
  for (const auto& [a, b] : edges) {
    int i = space.index_of(a), j = space.index_of(b);
    if (i == j) throw Error("SamePoint", "edge with equal endpoints");
    if (seen.count({j, i}))
      throw Error("OppositePairPresent", "edge list contains e and -e");
    seen.insert({i, j});
    std::vector<Rat> row(space.size(), Rat(0));
    Rat inv = Rat(1) / space.dist(i, j);
    row[i] = inv;
    row[j] = -inv;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const int n = space.size();
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (int c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace freeiso
