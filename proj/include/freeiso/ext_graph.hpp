#pragma once

#include "freeiso/graph.hpp"
#include "freeiso/metric_space.hpp"

namespace freeiso {

/// Weighted directed graph of preserved extreme molecules; weight(e) = d(e).
struct ExtGraph {
  DirectedSymGraph g;          // vertices = labels incident to some edge
  std::vector<Rat> weight;     // per directed edge id
  std::vector<int> point_of;   // graph vertex -> point index in the space
};

/// Strict triangle test: on finite spaces m_{x,y} is a preserved extreme
/// point iff d(x,y) < d(x,z) + d(z,y) for every third point z.
bool is_preserved_extreme(const FiniteMetricSpace& space, const std::string& x,
                          const std::string& y);
bool is_preserved_extreme(const FiniteMetricSpace& space, int i, int j);

ExtGraph ext_graph(const FiniteMetricSpace& space);

enum class PragueClass { Prague, WeakPragueOnly, NotWeakPrague };

struct PragueVerdict {
  PragueClass cls;
  std::string diagnostics;
};

struct Comparator {
  bool exact = true;
  double tol = 1e-9;
  bool equal(const Rat& a, const Rat& b) const {
    if (exact) return a == b;
    return std::abs(rat_to_double(a) - rat_to_double(b)) <= tol;
  }
};

/// Weak Prague: every point incident to an extreme edge and the graph
/// connected. Prague additionally: shortest-path weight in the graph equals
/// the distance for every vertex pair.
PragueVerdict classify_prague(const FiniteMetricSpace& space, Comparator cmp = {});

/// Same classification against a caller-supplied graph (used to exercise the
/// failure branches, which do not arise from ext_graph on valid inputs).
PragueVerdict classify_against(const FiniteMetricSpace& space, const ExtGraph& ext,
                               Comparator cmp = {});

/// Shortest-path metric space of a (possibly weighted) connected graph.
FiniteMetricSpace graph_metric_space(const DirectedSymGraph& g,
                                     const std::vector<Rat>* und_weights = nullptr);

const char* prague_class_name(PragueClass cls);

}  // namespace freeiso
