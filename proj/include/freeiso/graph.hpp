#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freeiso/metric_space.hpp"

namespace freeiso {

/// Symmetric directed graph: every edge is stored together with its reversal
/// and no loops are allowed. Undirected structure is kept alongside; each
/// undirected edge u<v has a forward directed id and its twin.
struct DirectedSymGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // directed, sorted lexicographically
  std::vector<int> twin;                   // directed id -> reversed id
  std::vector<int> und_of;                 // directed id -> undirected id
  std::vector<int> und_fwd;                // undirected id -> directed id (u < v)
  std::vector<std::vector<int>> adj;       // vertex -> undirected neighbor vertices
  std::vector<std::vector<int>> out;       // vertex -> outgoing directed ids

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int und_count() const { return static_cast<int>(und_fwd.size()); }
  int vertex_index(const std::string& label) const;
  int edge_index(int u, int v) const;  // -1 when absent
  std::pair<int, int> und_pair(int und_id) const;
};

DirectedSymGraph make_graph(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& und_edges);
DirectedSymGraph make_graph_indexed(int n, const std::vector<std::string>& labels,
                                    const std::vector<std::pair<int, int>>& und_edges);

/// Subgraph spanned by a set of undirected edge ids; vertices are exactly the
/// incident ones. Mapping back: vertex_back[i] / und_back[k] give original ids.
struct Subgraph {
  DirectedSymGraph graph;
  std::vector<int> vertex_back;
  std::vector<int> und_back;
};
Subgraph spanned_subgraph(const DirectedSymGraph& g, const std::vector<int>& und_ids);

/// Directed simple cycle as an edge-id sequence, rotated so the smallest edge
/// id leads.
struct SimpleCycle {
  std::vector<int> edge_ids;

  std::vector<int> sorted_ids() const;
  bool operator==(const SimpleCycle& o) const { return edge_ids == o.edge_ids; }
  bool operator<(const SimpleCycle& o) const { return edge_ids < o.edge_ids; }
};

struct CycleList {
  std::vector<SimpleCycle> cycles;
  bool complete = true;
};

struct CycleCaps {
  int max_len = -1;          // -1: |V|
  long long max_count = 1000000;
};

/// All simple directed cycles with min_len <= length <= max_len. Both
/// orientations are listed; 2-cycles {e, -e} only when min_len == 2. When the
/// count cap is hit the partial list is returned with complete = false.
CycleList simple_cycles(const DirectedSymGraph& g, int min_len, CycleCaps caps = {});

bool is_simple_directed_cycle(const DirectedSymGraph& g, const std::vector<int>& edge_ids);

bool is_connected(const DirectedSymGraph& g);

/// Vertex connectivity (Menger, unit-capacity max-flow over non-adjacent
/// pairs; complete graphs have connectivity |V| - 1). Single-vertex graphs
/// get 0, so an isolated edge does not count as 2-connected.
int vertex_connectivity(const DirectedSymGraph& g);
bool is_2_connected(const DirectedSymGraph& g);
bool is_3_connected(const DirectedSymGraph& g);

/// Smallest vertex cut found by the connectivity search (empty for complete
/// or disconnected graphs in the obvious degenerate ways).
std::vector<int> minimum_vertex_cut(const DirectedSymGraph& g);

/// Classes of "lies on a common simple cycle" (reflexive closure), i.e.
/// biconnected blocks; bridges are singletons. Lists of undirected edge ids.
std::vector<std::vector<int>> edge_components(const DirectedSymGraph& g);

/// Spanning-forest tests over undirected edge ids.
bool is_basis(const DirectedSymGraph& g, const std::vector<int>& und_ids);
std::vector<int> extend_to_basis(const DirectedSymGraph& g, const std::vector<int>& und_ids);
bool contains_cycle(const DirectedSymGraph& g, const std::vector<int>& und_ids);
int edge_rank(const DirectedSymGraph& g, const std::vector<int>& und_ids);

/// Unoriented-cycle detection on a directed edge list without opposite pairs.
bool has_unoriented_cycle(const DirectedSymGraph& g, const std::vector<int>& edge_ids);

/// Rank of {m_e : e in E'} by exact Gaussian elimination; E' is given as pairs
/// of labels of the space and must not contain opposite pairs.
int molecule_rank(const FiniteMetricSpace& space,
                  const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace freeiso
