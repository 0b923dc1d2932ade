#pragma once

#include <optional>
#include <random>

#include "freeiso/graph.hpp"

namespace freeiso {

/// Bijection of directed edges with sigma(-e) = -sigma(e). img maps directed
/// edge ids of the domain graph to directed edge ids of the codomain (same
/// graph unless stated otherwise).
struct SignedEdgeBijection {
  std::vector<int> img;

  bool operator==(const SignedEdgeBijection& o) const { return img == o.img; }
  bool operator<(const SignedEdgeBijection& o) const { return img < o.img; }
};

SignedEdgeBijection identity_bijection(const DirectedSymGraph& g);
SignedEdgeBijection negated_identity(const DirectedSymGraph& g);
SignedEdgeBijection inverse(const SignedEdgeBijection& s);
/// (a then b): returns b after a, i.e. img[e] = b.img[a.img[e]].
SignedEdgeBijection compose(const SignedEdgeBijection& a, const SignedEdgeBijection& b);
/// Edge bijection induced by a vertex bijection of the same graph.
SignedEdgeBijection from_vertex_map(const DirectedSymGraph& g, const std::vector<int>& f);
bool is_signed_bijection(const DirectedSymGraph& g, const SignedEdgeBijection& s);

/// Condition: E' is a simple cycle iff sigma(E') is, checked in both
/// directions over the complete cycle list.
bool is_cycle_preserving(const DirectedSymGraph& g, const SignedEdgeBijection& sigma,
                         const CycleList& cycles);

struct StarCheckOptions {
  bool exhaustive = false;        // enumerate all bases of E' (<= 12 edges)
  bool two_connected_variant = false;  // use the shared-cycle condition on E'
  int random_bases = 20;
  std::uint64_t seed = 1;
};

/// Decides whether E' (undirected edge ids, proper subset) equals E_v for some
/// vertex v, purely combinatorially: E' connected as a subgraph, and for
/// sampled (or all) bases B of E' and every outside edge e, B + e is a basis
/// of the whole edge set. The two-connected variant replaces connectivity by
/// "every two edges of E' share a simple cycle inside E'".
bool is_vertex_star_complement(const DirectedSymGraph& g, const std::vector<int>& und_ids,
                               const StarCheckOptions& opts = {});

/// Undirected edge set avoiding v.
std::vector<int> vertex_star_complement(const DirectedSymGraph& g, int v);

/// Whitney reconstruction on a 3-connected graph: the unique vertex bijection
/// f with sigma({v,w}) = {f(v), f(w)}, obtained by matching star complements
/// through sigma; verified as a graph isomorphism before returning.
std::vector<int> reconstruct_vertex_map(const DirectedSymGraph& g,
                                        const SignedEdgeBijection& sigma,
                                        const CycleList& cycles);

}  // namespace freeiso
