#pragma once

#include "freeiso/sigma.hpp"

namespace freeiso {

/// Atoms of the Boolean algebra generated by the simple directed cycles with
/// at least 3 edges: two edges share an atom iff they lie on exactly the same
/// cycles. Pieces come with their negations and a +/- quotient bipartite
/// graph (piece classes vs cycle classes) labeled by piece size.
struct PieceDecomposition {
  std::vector<std::vector<int>> piece_edges;  // piece -> directed ids (enumeration)
  std::vector<int> piece_of;                  // directed id -> piece
  std::vector<int> neg_piece;                 // piece -> piece holding the negations
  std::vector<SimpleCycle> cycles;            // all simple directed cycles, >= 3 edges
  std::vector<int> neg_cycle;                 // cycle -> cycle of negated edges
  std::vector<std::vector<int>> cycle_pieces; // cycle -> pieces it decomposes into
  std::vector<std::vector<int>> piece_cycles; // piece -> cycles containing it

  int piece_classes = 0;
  int cycle_classes = 0;
  std::vector<int> class_of_piece;
  std::vector<int> class_of_cycle;
  std::vector<int> rep_piece;                 // class -> representative piece
  std::vector<int> rep_cycle;
  std::vector<int> label;                     // piece class -> piece size
  std::vector<std::vector<int>> adj_pc;       // piece class -> cycle classes
  std::vector<std::vector<int>> adj_cp;       // cycle class -> piece classes

  int piece_count() const { return static_cast<int>(piece_edges.size()); }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

/// Needs the complete >=3 cycle list of a 2-connected graph on >= 3 vertices.
PieceDecomposition pieces(const DirectedSymGraph& g, const CycleList& cycles);

/// Automorphism of the quotient: a permutation of piece classes and one of
/// cycle classes, jointly preserving labels and incidence.
struct QuotientAut {
  std::vector<int> piece_perm;
  std::vector<int> cycle_perm;
  bool operator==(const QuotientAut& o) const {
    return piece_perm == o.piece_perm && cycle_perm == o.cycle_perm;
  }
  bool operator<(const QuotientAut& o) const {
    return std::tie(piece_perm, cycle_perm) < std::tie(o.piece_perm, o.cycle_perm);
  }
};

std::vector<QuotientAut> quotient_automorphisms(const PieceDecomposition& pd);

/// Concrete edge bijection realizing a quotient automorphism with identity
/// in-piece index maps. seed_sign picks which orientation the first piece
/// class maps to; sign choices propagate through the incidence structure.
/// Fails (nullopt) only if the propagation is inconsistent.
std::optional<SignedEdgeBijection> lift_quotient_aut(const DirectedSymGraph& g,
                                                     const PieceDecomposition& pd,
                                                     const QuotientAut& aut,
                                                     int seed_sign);

struct StructureTerm {
  enum class Kind { Trivial, Z2, Sym, QAut, Product, Wreath };
  Kind kind = Kind::Trivial;
  int n = 0;               // Sym
  BigInt aut_order = 1;    // QAut
  std::vector<StructureTerm> parts;   // Product members or Wreath inner list
  std::vector<StructureTerm> acting;  // Wreath acting group (single element)

  BigInt order() const;
  std::string str() const;
};

struct GroupDescription {
  BigInt order = 1;
  std::vector<SignedEdgeBijection> generators;  // over the ambient graph
  StructureTerm structure;
};

/// Full linear isometry group of F(G) for a connected unweighted graph:
/// per-block piece/wreath description assembled across blocks by the
/// permutations of blocks with isometric free spaces.
GroupDescription graph_liso(const DirectedSymGraph& g, SearchCaps caps = {});

/// Order of the group generated by closing the generators under composition;
/// nullopt when the closure exceeds the cap.
std::optional<BigInt> closure_order(const std::vector<SignedEdgeBijection>& generators,
                                    long long cap = 1000000);

struct L1CheckResult {
  int samples = 0;
  bool all_equal = false;
};

/// Splits random molecules along edge components through the block-cut tree
/// and checks the exact additivity of the free norm across components.
L1CheckResult l1_decomposition_check(const DirectedSymGraph& g, int samples,
                                     std::uint64_t seed);

}  // namespace freeiso
