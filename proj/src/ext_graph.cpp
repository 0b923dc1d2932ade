#include "freeiso/ext_graph.hpp"

#include <queue>

namespace freeiso {

bool is_preserved_extreme(const FiniteMetricSpace& space, int i, int j) {
  if (i == j) throw Error("SamePoint", "extreme test needs two distinct points");
  for (int z = 0; z < space.size(); ++z) {
    if (z == i || z == j) continue;
    if (space.dist(i, j) >= space.dist(i, z) + space.dist(z, j)) return false;
  }
  return true;
}

bool is_preserved_extreme(const FiniteMetricSpace& space, const std::string& x,
                          const std::string& y) {
  return is_preserved_extreme(space, space.index_of(x), space.index_of(y));
}

ExtGraph ext_graph(const FiniteMetricSpace& space) {
  if (space.size() < 2) throw Error("TooSmall", "need at least two points");
  std::vector<std::pair<int, int>> und;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (is_preserved_extreme(space, i, j)) und.push_back({i, j});

  std::vector<char> incident(space.size(), 0);
  for (auto [i, j] : und) incident[i] = incident[j] = 1;
  ExtGraph ext;
  std::vector<int> fwd(space.size(), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < space.size(); ++i)
    if (incident[i]) {
      fwd[i] = static_cast<int>(labels.size());
      labels.push_back(space.points[i]);
      ext.point_of.push_back(i);
    }
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : und) edges.push_back({fwd[i], fwd[j]});
  ext.g = make_graph_indexed(static_cast<int>(labels.size()), labels, edges);
  ext.weight.resize(ext.g.edge_count());
  for (int id = 0; id < ext.g.edge_count(); ++id) {
    auto [u, v] = ext.g.edges[id];
    ext.weight[id] = space.dist(ext.point_of[u], ext.point_of[v]);
  }
  return ext;
}

namespace {

std::vector<Rat> dijkstra(const DirectedSymGraph& g, const std::vector<Rat>& weight,
                          int start, std::vector<char>& reached) {
  const int n = g.vertex_count();
  std::vector<Rat> dist(n, Rat(0));
  reached.assign(n, 0);
  std::vector<char> done(n, 0);
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
      Rat nd = du + weight[id];
      if (!reached[v] || nd < dist[v]) {
        reached[v] = 1;
        dist[v] = nd;
        heap.push({nd, v});
      }
    }
  }
  return dist;
}

}  // namespace

PragueVerdict classify_against(const FiniteMetricSpace& space, const ExtGraph& ext,
                               Comparator cmp) {
  if (ext.g.vertex_count() < space.size()) {
    for (int i = 0; i < space.size(); ++i) {
      bool found = false;
      for (int p : ext.point_of)
        if (p == i) found = true;
      if (!found)
        return {PragueClass::NotWeakPrague,
                "point \"" + space.points[i] + "\" is incident to no extreme edge"};
    }
  }
  if (!is_connected(ext.g))
    return {PragueClass::NotWeakPrague, "extreme graph is disconnected"};

  for (int u = 0; u < ext.g.vertex_count(); ++u) {
    std::vector<char> reached;
    std::vector<Rat> dist = dijkstra(ext.g, ext.weight, u, reached);
    for (int v = 0; v < ext.g.vertex_count(); ++v) {
      if (v == u) continue;
      Rat direct = space.dist(ext.point_of[u], ext.point_of[v]);
      if (!reached[v] || !cmp.equal(dist[v], direct))
        return {PragueClass::WeakPragueOnly,
                "shortest path between \"" + ext.g.vertices[u] + "\" and \"" +
                    ext.g.vertices[v] + "\" does not realize the distance"};
    }
  }
  return {PragueClass::Prague, ""};
}

PragueVerdict classify_prague(const FiniteMetricSpace& space, Comparator cmp) {
  if (space.size() < 2) throw Error("TooSmall", "need at least two points");
  return classify_against(space, ext_graph(space), cmp);
}

FiniteMetricSpace graph_metric_space(const DirectedSymGraph& g,
                                     const std::vector<Rat>* und_weights) {
  if (!is_connected(g))
    throw Error("NotConnected", "graph metric needs a connected graph");
  std::vector<Rat> weight(g.edge_count(), Rat(1));
  if (und_weights) {
    if (static_cast<int>(und_weights->size()) != g.und_count())
      throw Error("BadShape", "one weight per undirected edge expected");
    for (int id = 0; id < g.edge_count(); ++id) {
      weight[id] = (*und_weights)[g.und_of[id]];
      if (weight[id] <= 0) throw Error("NegativeDistance", "edge weights must be positive");
    }
  }
  const int n = g.vertex_count();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int u = 0; u < n; ++u) {
    std::vector<char> reached;
    d[u] = dijkstra(g, weight, u, reached);
  }
  return validate_metric(d, g.vertices);
}

const char* prague_class_name(PragueClass cls) {
  switch (cls) {
    case PragueClass::Prague: return "Prague";
    case PragueClass::WeakPragueOnly: return "WeakPragueOnly";
    case PragueClass::NotWeakPrague: return "NotWeakPrague";
  }
  return "?";
}

}  // namespace freeiso
