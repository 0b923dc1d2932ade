#pragma once

#include <optional>

#include "freeiso/ext_graph.hpp"
#include "freeiso/free_norm.hpp"
#include "freeiso/whitney.hpp"

namespace freeiso {

enum class SigmaMode { SaSb, SaSbSc };

enum class ScStatus { Pass, Fail, NotEvaluated };

struct ConditionReport {
  bool sa = false;
  bool sb = false;
  ScStatus sc = ScStatus::NotEvaluated;
  std::string detail;

  bool pass(SigmaMode mode) const {
    if (!sa || !sb) return false;
    return mode == SigmaMode::SaSb || sc == ScStatus::Pass;
  }
};

/// Per-condition check of a symmetric bijection sigma : E_ext(M1) -> E_ext(M2).
/// (Sa) over the complete simple-cycle lists, both directions; (Sb) exact
/// weight-ratio constancy per cycle; (Sc) evaluated only once (Sa) and (Sb)
/// hold, on one shortest path per ordered vertex pair, both directions,
/// against the norm oracle.
ConditionReport check_conditions(const FiniteMetricSpace& m1, const ExtGraph& e1,
                                 const FiniteMetricSpace& m2, const ExtGraph& e2,
                                 const SignedEdgeBijection& sigma, SigmaMode mode,
                                 CycleCaps caps = {}, Comparator cmp = {});

/// T_sigma on molecules: decompose along edge paths of E_ext(M1), map each
/// elementary molecule through sigma, recombine over M2.
Molecule apply_sigma(const FiniteMetricSpace& m1, const ExtGraph& e1,
                     const FiniteMetricSpace& m2, const ExtGraph& e2,
                     const SignedEdgeBijection& sigma, const Molecule& x);

struct SigmaEnumeration {
  ExtGraph ext;
  std::vector<SignedEdgeBijection> sigmas;
  bool complete = true;
};

struct SearchCaps {
  long long max_nodes = 50000000;  // backtracking node budget
  CycleCaps cycles;
};

/// All sigma : E_ext -> E_ext passing the mode's conditions, i.e. the
/// generators of LIso(F(M)) under sigma -> T_sigma. Backtracking over
/// undirected-edge images with a sign bit, pruning on completed cycles.
SigmaEnumeration enumerate_sigma(const FiniteMetricSpace& space, SigmaMode mode,
                                 SearchCaps caps = {});

/// Existence search for a condition-passing bijection between two weighted
/// symmetric graphs (used for block equivalence); stops at the first hit.
std::optional<SignedEdgeBijection> find_sigma_between(const DirectedSymGraph& g1,
                                                      const std::vector<Rat>& w1,
                                                      const DirectedSymGraph& g2,
                                                      const std::vector<Rat>& w2,
                                                      SearchCaps caps = {});

struct RigidityWitness {
  SignedEdgeBijection sigma;
  int eps = 1;                // +1 or -1
  std::vector<int> f;         // vertex map on the space's points
};

struct RigidityVerdict {
  bool rigid = false;
  bool via_three_connected = false;    // Whitney fast path fired
  std::vector<RigidityWitness> witnesses;
  std::optional<SignedEdgeBijection> counterexample;
  long long sigma_count = 0;
};

struct RigidityOptions {
  SearchCaps caps;
  // Enumerate witnesses only when the extreme graph has at most this many
  // undirected edges; the 3-connected fast path does not need them.
  int witness_edge_limit = 12;
};

/// sigma factors as eps * (f x f) with f an isometry of the space; complete
/// search (propagation over a spanning structure, both root assignments).
std::optional<RigidityWitness> factor_sigma(const FiniteMetricSpace& space,
                                            const ExtGraph& ext,
                                            const SignedEdgeBijection& sigma);

/// Rigid iff every enumerated sigma factors through a sign and an isometry.
/// 3-connected extreme graphs short-circuit to rigid; witnesses are still
/// produced when enumeration is feasible.
RigidityVerdict decide_rigidity(const FiniteMetricSpace& space, RigidityOptions opts = {});

}  // namespace freeiso
