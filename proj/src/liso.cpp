#include "freeiso/liso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

namespace freeiso {

PieceDecomposition pieces(const DirectedSymGraph& g, const CycleList& cl) {
  if (!cl.complete) throw Error("CycleCapExceeded", "cycle enumeration was capped");
  PieceDecomposition pd;
  for (const SimpleCycle& c : cl.cycles)
    if (c.edge_ids.size() >= 3) pd.cycles.push_back(c);

  const int m = g.edge_count();
  std::vector<std::vector<int>> sig(m);
  for (int ci = 0; ci < pd.cycle_count(); ++ci)
    for (int e : pd.cycles[ci].edge_ids) sig[e].push_back(ci);
  for (int e = 0; e < m; ++e)
    if (sig[e].empty())
      throw Error("NotTwoConnected", "an edge lies on no simple cycle of length >= 3");

  std::map<std::vector<int>, std::vector<int>> by_sig;
  for (int e = 0; e < m; ++e) by_sig[sig[e]].push_back(e);

  // Create pieces in pairs so the edge enumeration satisfies -e_i^p = e_i^-p.
  pd.piece_of.assign(m, -1);
  for (int e = 0; e < m; ++e) {
    if (pd.piece_of[e] >= 0) continue;
    const std::vector<int>& own = by_sig.at(sig[e]);
    int p = pd.piece_count();
    pd.piece_edges.push_back(own);
    for (int x : own) pd.piece_of[x] = p;
    std::vector<int> mirror;
    for (int x : own) mirror.push_back(g.twin[x]);
    int q = pd.piece_count();
    pd.piece_edges.push_back(mirror);
    for (int x : mirror) {
      if (pd.piece_of[x] >= 0)
        throw Error("InternalError", "piece negation collides with itself");
      pd.piece_of[x] = q;
    }
    pd.neg_piece.push_back(q);
    pd.neg_piece.push_back(p);
  }

  pd.piece_cycles.resize(pd.piece_count());
  for (int p = 0; p < pd.piece_count(); ++p) pd.piece_cycles[p] = sig[pd.piece_edges[p][0]];
  pd.cycle_pieces.resize(pd.cycle_count());
  for (int ci = 0; ci < pd.cycle_count(); ++ci) {
    std::set<int> ps;
    size_t total = 0;
    for (int e : pd.cycles[ci].edge_ids) ps.insert(pd.piece_of[e]);
    pd.cycle_pieces[ci].assign(ps.begin(), ps.end());
    for (int p : pd.cycle_pieces[ci]) total += pd.piece_edges[p].size();
    if (total != pd.cycles[ci].edge_ids.size())
      throw Error("InternalError", "a cycle is not a disjoint union of pieces");
  }

  std::map<std::vector<int>, int> cycle_by_ids;
  for (int ci = 0; ci < pd.cycle_count(); ++ci)
    cycle_by_ids[pd.cycles[ci].sorted_ids()] = ci;
  pd.neg_cycle.resize(pd.cycle_count());
  for (int ci = 0; ci < pd.cycle_count(); ++ci) {
    std::vector<int> neg;
    for (int e : pd.cycles[ci].edge_ids) neg.push_back(g.twin[e]);
    std::sort(neg.begin(), neg.end());
    pd.neg_cycle[ci] = cycle_by_ids.at(neg);
  }

  pd.class_of_piece.assign(pd.piece_count(), -1);
  for (int p = 0; p < pd.piece_count(); ++p) {
    if (pd.class_of_piece[p] >= 0) continue;
    int cid = pd.piece_classes++;
    pd.class_of_piece[p] = pd.class_of_piece[pd.neg_piece[p]] = cid;
    pd.rep_piece.push_back(p);
    pd.label.push_back(static_cast<int>(pd.piece_edges[p].size()));
  }
  pd.class_of_cycle.assign(pd.cycle_count(), -1);
  for (int c = 0; c < pd.cycle_count(); ++c) {
    if (pd.class_of_cycle[c] >= 0) continue;
    int cid = pd.cycle_classes++;
    pd.class_of_cycle[c] = pd.class_of_cycle[pd.neg_cycle[c]] = cid;
    pd.rep_cycle.push_back(c);
  }

  pd.adj_pc.resize(pd.piece_classes);
  for (int pc = 0; pc < pd.piece_classes; ++pc) {
    std::set<int> nb;
    for (int c : pd.piece_cycles[pd.rep_piece[pc]]) nb.insert(pd.class_of_cycle[c]);
    pd.adj_pc[pc].assign(nb.begin(), nb.end());
  }
  pd.adj_cp.resize(pd.cycle_classes);
  for (int cc = 0; cc < pd.cycle_classes; ++cc) {
    std::set<int> nb;
    for (int p : pd.cycle_pieces[pd.rep_cycle[cc]]) nb.insert(pd.class_of_piece[p]);
    pd.adj_cp[cc].assign(nb.begin(), nb.end());
  }
  return pd;
}

namespace {

struct AutSearch {
  const PieceDecomposition& pd;
  std::vector<int> p_key;  // invariant key index per piece class
  std::vector<int> c_key;
  std::vector<int> p_img, c_img;
  std::vector<char> p_used, c_used;
  std::vector<QuotientAut> out;

  explicit AutSearch(const PieceDecomposition& pd_) : pd(pd_) {
    // Keys: label + degree for piece classes; degree + sorted neighbor labels
    // for cycle classes.
    std::map<std::pair<int, int>, int> pk;
    for (int pc = 0; pc < pd.piece_classes; ++pc)
      p_key.push_back(pk.emplace(std::make_pair(pd.label[pc],
                                                static_cast<int>(pd.adj_pc[pc].size())),
                                 static_cast<int>(pk.size()))
                          .first->second);
    std::map<std::vector<int>, int> ck;
    for (int cc = 0; cc < pd.cycle_classes; ++cc) {
      std::vector<int> key;
      for (int pc : pd.adj_cp[cc]) key.push_back(pd.label[pc]);
      std::sort(key.begin(), key.end());
      c_key.push_back(ck.emplace(key, static_cast<int>(ck.size())).first->second);
    }
  }

  bool adjacency_ok_piece(int pc, int img) const {
    // Both endpoints already mapped must stay adjacent.
    for (int cc : pd.adj_pc[pc]) {
      if (c_img[cc] < 0) continue;
      if (!std::binary_search(pd.adj_pc[img].begin(), pd.adj_pc[img].end(), c_img[cc]))
        return false;
    }
    return true;
  }

  bool adjacency_ok_cycle(int cc, int img) const {
    if (pd.adj_cp[cc].size() != pd.adj_cp[img].size()) return false;
    for (int pc : pd.adj_cp[cc]) {
      if (p_img[pc] < 0) continue;
      if (!std::binary_search(pd.adj_cp[img].begin(), pd.adj_cp[img].end(), p_img[pc]))
        return false;
    }
    return true;
  }

  void run(int depth) {
    if (depth == pd.piece_classes + pd.cycle_classes) {
      out.push_back({p_img, c_img});
      return;
    }
    if (depth < pd.piece_classes) {
      int pc = depth;
      for (int img = 0; img < pd.piece_classes; ++img) {
        if (p_used[img] || p_key[img] != p_key[pc]) continue;
        if (pd.adj_pc[img].size() != pd.adj_pc[pc].size()) continue;
        if (!adjacency_ok_piece(pc, img)) continue;
        p_img[pc] = img;
        p_used[img] = 1;
        run(depth + 1);
        p_used[img] = 0;
        p_img[pc] = -1;
      }
    } else {
      int cc = depth - pd.piece_classes;
      for (int img = 0; img < pd.cycle_classes; ++img) {
        if (c_used[img] || c_key[img] != c_key[cc]) continue;
        if (!adjacency_ok_cycle(cc, img)) continue;
        // All piece classes are mapped by now; demand exact adjacency match.
        bool exact = true;
        for (int pc : pd.adj_cp[cc])
          if (!std::binary_search(pd.adj_cp[img].begin(), pd.adj_cp[img].end(), p_img[pc])) {
            exact = false;
            break;
          }
        if (!exact) continue;
        c_img[cc] = img;
        c_used[img] = 1;
        run(depth + 1);
        c_used[img] = 0;
        c_img[cc] = -1;
      }
    }
  }
};

}  // namespace

std::vector<QuotientAut> quotient_automorphisms(const PieceDecomposition& pd) {
  AutSearch s(pd);
  s.p_img.assign(pd.piece_classes, -1);
  s.c_img.assign(pd.cycle_classes, -1);
  s.p_used.assign(pd.piece_classes, 0);
  s.c_used.assign(pd.cycle_classes, 0);
  s.run(0);
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

std::optional<SignedEdgeBijection> lift_quotient_aut(const DirectedSymGraph& g,
                                                     const PieceDecomposition& pd,
                                                     const QuotientAut& aut,
                                                     int seed_sign) {
  if (pd.piece_count() == 0) return std::nullopt;
  std::vector<int> piece_img(pd.piece_count(), -1);
  std::vector<int> cycle_img(pd.cycle_count(), -1);

  auto contains_piece = [&](int cycle, int piece) {
    return std::binary_search(pd.cycle_pieces[cycle].begin(), pd.cycle_pieces[cycle].end(),
                              piece);
  };

  std::queue<int> piece_queue, cycle_queue;
  auto assign_piece = [&](int p, int q) -> bool {
    if (piece_img[p] >= 0) return piece_img[p] == q;
    piece_img[p] = q;
    piece_img[pd.neg_piece[p]] = pd.neg_piece[q];
    piece_queue.push(p);
    piece_queue.push(pd.neg_piece[p]);
    return true;
  };
  auto assign_cycle = [&](int c, int d) -> bool {
    if (cycle_img[c] >= 0) return cycle_img[c] == d;
    cycle_img[c] = d;
    cycle_img[pd.neg_cycle[c]] = pd.neg_cycle[d];
    cycle_queue.push(c);
    cycle_queue.push(pd.neg_cycle[c]);
    return true;
  };

  int seed = pd.rep_piece[0];
  int target_rep = pd.rep_piece[aut.piece_perm[0]];
  if (!assign_piece(seed, seed_sign ? pd.neg_piece[target_rep] : target_rep))
    return std::nullopt;

  while (!piece_queue.empty() || !cycle_queue.empty()) {
    if (!piece_queue.empty()) {
      int p = piece_queue.front();
      piece_queue.pop();
      int q = piece_img[p];
      for (int c : pd.piece_cycles[p]) {
        int tclass = aut.cycle_perm[pd.class_of_cycle[c]];
        int cand = pd.rep_cycle[tclass];
        int chosen;
        if (contains_piece(cand, q))
          chosen = cand;
        else if (contains_piece(pd.neg_cycle[cand], q))
          chosen = pd.neg_cycle[cand];
        else
          return std::nullopt;
        if (!assign_cycle(c, chosen)) return std::nullopt;
      }
    } else {
      int c = cycle_queue.front();
      cycle_queue.pop();
      int d = cycle_img[c];
      for (int p : pd.cycle_pieces[c]) {
        int tclass = aut.piece_perm[pd.class_of_piece[p]];
        int cand = pd.rep_piece[tclass];
        int chosen;
        bool in_pos = contains_piece(d, cand);
        bool in_neg = contains_piece(d, pd.neg_piece[cand]);
        if (in_pos == in_neg) return std::nullopt;
        chosen = in_pos ? cand : pd.neg_piece[cand];
        if (!assign_piece(p, chosen)) return std::nullopt;
      }
    }
  }
  for (int p = 0; p < pd.piece_count(); ++p)
    if (piece_img[p] < 0)
      throw Error("InternalError", "piece incidence structure is not connected");

  SignedEdgeBijection sigma;
  sigma.img.assign(g.edge_count(), -1);
  for (int p = 0; p < pd.piece_count(); ++p) {
    const auto& from = pd.piece_edges[p];
    const auto& to = pd.piece_edges[piece_img[p]];
    for (size_t i = 0; i < from.size(); ++i) sigma.img[from[i]] = to[i];
  }
  if (!is_signed_bijection(g, sigma))
    throw Error("InternalError", "lifted map is not a signed bijection");
  for (int c = 0; c < pd.cycle_count(); ++c) {
    std::vector<int> img;
    for (int e : pd.cycles[c].edge_ids) img.push_back(sigma.img[e]);
    std::sort(img.begin(), img.end());
    if (img != pd.cycles[cycle_img[c]].sorted_ids())
      throw Error("InternalError", "lifted map breaks a cycle image");
  }
  return sigma;
}

BigInt StructureTerm::order() const {
  auto factorial = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (kind) {
    case Kind::Trivial: return 1;
    case Kind::Z2: return 2;
    case Kind::Sym: return factorial(n);
    case Kind::QAut: return aut_order;
    case Kind::Product: {
      BigInt o = 1;
      for (const auto& part : parts) o *= part.order();
      return o;
    }
    case Kind::Wreath: {
      BigInt o = 1;
      for (const auto& part : parts) o *= part.order();
      return o * acting.front().order();
    }
  }
  return 1;
}

namespace {

std::string wrap_if_composite(const StructureTerm& t) {
  std::string s = t.str();
  if (t.kind == StructureTerm::Kind::Product || t.kind == StructureTerm::Kind::Wreath)
    return "(" + s + ")";
  return s;
}

}  // namespace

std::string StructureTerm::str() const {
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::Z2: return "Z2";
    case Kind::Sym: return "S_" + std::to_string(n);
    case Kind::QAut: return "QAut(" + aut_order.str() + ")";
    case Kind::Product: {
      std::string s;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " x ";
        s += wrap_if_composite(parts[i]);
      }
      return s;
    }
    case Kind::Wreath: {
      std::string s = "(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " x ";
        s += wrap_if_composite(parts[i]);
      }
      s += ") wr " + wrap_if_composite(acting.front());
      return s;
    }
  }
  return "1";
}

std::optional<BigInt> closure_order(const std::vector<SignedEdgeBijection>& generators,
                                    long long cap) {
  if (generators.empty()) return BigInt(1);
  const size_t m = generators.front().img.size();
  SignedEdgeBijection id;
  id.img.resize(m);
  std::iota(id.img.begin(), id.img.end(), 0);
  std::set<std::vector<int>> seen{id.img};
  std::queue<SignedEdgeBijection> work;
  work.push(id);
  while (!work.empty()) {
    SignedEdgeBijection cur = work.front();
    work.pop();
    for (const auto& gen : generators) {
      SignedEdgeBijection nxt = compose(cur, gen);
      if (seen.insert(nxt.img).second) {
        if (static_cast<long long>(seen.size()) > cap) return std::nullopt;
        work.push(nxt);
      }
    }
  }
  return BigInt(seen.size());
}

namespace {

struct BlockInfo {
  Subgraph sub;
  bool single_edge = false;
  BigInt order = 1;
  StructureTerm term;
  std::vector<SignedEdgeBijection> gens;  // local to sub.graph
};

BigInt factorial_big(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

SignedEdgeBijection in_piece_generator(const DirectedSymGraph& g,
                                       const PieceDecomposition& pd, int piece,
                                       const std::vector<int>& index_perm) {
  SignedEdgeBijection s = identity_bijection(g);
  const auto& own = pd.piece_edges[piece];
  const auto& mir = pd.piece_edges[pd.neg_piece[piece]];
  for (size_t i = 0; i < own.size(); ++i) {
    s.img[own[i]] = own[index_perm[i]];
    s.img[mir[i]] = mir[index_perm[i]];
  }
  return s;
}

QuotientAut compose_aut(const QuotientAut& a, const QuotientAut& b) {
  QuotientAut out;
  out.piece_perm.resize(a.piece_perm.size());
  out.cycle_perm.resize(a.cycle_perm.size());
  for (size_t i = 0; i < a.piece_perm.size(); ++i)
    out.piece_perm[i] = b.piece_perm[a.piece_perm[i]];
  for (size_t i = 0; i < a.cycle_perm.size(); ++i)
    out.cycle_perm[i] = b.cycle_perm[a.cycle_perm[i]];
  return out;
}

std::vector<QuotientAut> aut_generating_subset(const std::vector<QuotientAut>& all) {
  if (all.empty()) return {};
  QuotientAut id;
  id.piece_perm.resize(all.front().piece_perm.size());
  id.cycle_perm.resize(all.front().cycle_perm.size());
  std::iota(id.piece_perm.begin(), id.piece_perm.end(), 0);
  std::iota(id.cycle_perm.begin(), id.cycle_perm.end(), 0);
  std::set<QuotientAut> closure{id};
  std::vector<QuotientAut> gens;
  for (const auto& a : all) {
    if (closure.count(a)) continue;
    gens.push_back(a);
    std::queue<QuotientAut> work;
    for (const auto& x : closure) work.push(x);
    closure.insert(a);
    work.push(a);
    while (!work.empty()) {
      QuotientAut cur = work.front();
      work.pop();
      for (const auto& gen : gens) {
        QuotientAut nxt = compose_aut(cur, gen);
        if (closure.insert(nxt).second) work.push(nxt);
      }
    }
  }
  return gens;
}

BlockInfo analyze_block(const DirectedSymGraph& g, const std::vector<int>& und_ids,
                        SearchCaps caps) {
  BlockInfo info;
  info.sub = spanned_subgraph(g, und_ids);
  if (und_ids.size() == 1) {
    info.single_edge = true;
    info.order = 2;
    info.term.kind = StructureTerm::Kind::Z2;
    info.gens.push_back(negated_identity(info.sub.graph));
    return info;
  }
  CycleList cl = simple_cycles(info.sub.graph, 3, caps.cycles);
  PieceDecomposition pd = pieces(info.sub.graph, cl);
  std::vector<QuotientAut> auts = quotient_automorphisms(pd);

  BigInt s_order = 1;
  for (int pc = 0; pc < pd.piece_classes; ++pc) s_order *= factorial_big(pd.label[pc]);
  info.order = s_order * BigInt(auts.size()) * 2;

  info.gens.push_back(negated_identity(info.sub.graph));
  for (int pc = 0; pc < pd.piece_classes; ++pc) {
    int len = pd.label[pc];
    if (len < 2) continue;
    std::vector<int> transpose(len), rotate(len);
    std::iota(transpose.begin(), transpose.end(), 0);
    std::swap(transpose[0], transpose[1]);
    for (int i = 0; i < len; ++i) rotate[i] = (i + 1) % len;
    info.gens.push_back(in_piece_generator(info.sub.graph, pd, pd.rep_piece[pc], transpose));
    if (len >= 3)
      info.gens.push_back(in_piece_generator(info.sub.graph, pd, pd.rep_piece[pc], rotate));
  }
  for (const auto& aut : aut_generating_subset(auts)) {
    auto lifted = lift_quotient_aut(info.sub.graph, pd, aut, 0);
    if (!lifted)
      throw Error("InternalError", "quotient automorphism did not lift");
    info.gens.push_back(std::move(*lifted));
  }

  std::vector<StructureTerm> sym_parts;
  for (int pc = 0; pc < pd.piece_classes; ++pc)
    if (pd.label[pc] >= 2) {
      StructureTerm t;
      t.kind = StructureTerm::Kind::Sym;
      t.n = pd.label[pc];
      sym_parts.push_back(t);
    }
  StructureTerm core;
  if (auts.size() > 1) {
    if (sym_parts.empty()) {
      core.kind = StructureTerm::Kind::QAut;
      core.aut_order = BigInt(auts.size());
    } else {
      core.kind = StructureTerm::Kind::Wreath;
      core.parts = sym_parts;
      StructureTerm acting;
      acting.kind = StructureTerm::Kind::QAut;
      acting.aut_order = BigInt(auts.size());
      core.acting.push_back(acting);
    }
  } else if (sym_parts.size() == 1) {
    core = sym_parts.front();
  } else if (!sym_parts.empty()) {
    core.kind = StructureTerm::Kind::Product;
    core.parts = sym_parts;
  }
  StructureTerm z2;
  z2.kind = StructureTerm::Kind::Z2;
  if (core.kind == StructureTerm::Kind::Trivial) {
    info.term = z2;
  } else {
    info.term.kind = StructureTerm::Kind::Product;
    info.term.parts = {core, z2};
  }
  return info;
}

SignedEdgeBijection embed_block_map(const DirectedSymGraph& g, const Subgraph& from,
                                    const Subgraph& to, const SignedEdgeBijection& local,
                                    SignedEdgeBijection base) {
  for (int le = 0; le < from.graph.edge_count(); ++le) {
    auto [lu, lv] = from.graph.edges[le];
    int ge = g.edge_index(from.vertex_back[lu], from.vertex_back[lv]);
    int li = local.img[le];
    auto [mu, mv] = to.graph.edges[li];
    int gi = g.edge_index(to.vertex_back[mu], to.vertex_back[mv]);
    base.img[ge] = gi;
  }
  return base;
}

}  // namespace

GroupDescription graph_liso(const DirectedSymGraph& g, SearchCaps caps) {
  if (!is_connected(g)) throw Error("NotConnected", "graph must be connected");
  GroupDescription out;
  std::vector<std::vector<int>> blocks = edge_components(g);
  if (blocks.empty()) {
    out.order = 1;
    return out;
  }

  std::vector<BlockInfo> infos;
  for (const auto& b : blocks) infos.push_back(analyze_block(g, b, caps));

  // Blocks with linearly isometric free spaces may be permuted; equivalence
  // is decided by searching for one condition-passing edge bijection.
  const int nb = static_cast<int>(infos.size());
  std::vector<int> cls(nb, -1);
  std::vector<std::vector<int>> members;
  std::vector<std::vector<std::optional<SignedEdgeBijection>>> between(
      nb, std::vector<std::optional<SignedEdgeBijection>>(nb));
  for (int i = 0; i < nb; ++i) {
    if (cls[i] >= 0) continue;
    int cid = static_cast<int>(members.size());
    cls[i] = cid;
    members.push_back({i});
    for (int j = i + 1; j < nb; ++j) {
      if (cls[j] >= 0) continue;
      std::optional<SignedEdgeBijection> link;
      if (infos[i].single_edge && infos[j].single_edge) {
        SignedEdgeBijection s;
        s.img = {0, 1};
        link = s;
      } else if (!infos[i].single_edge && !infos[j].single_edge) {
        std::vector<Rat> wi(infos[i].sub.graph.edge_count(), Rat(1));
        std::vector<Rat> wj(infos[j].sub.graph.edge_count(), Rat(1));
        link = find_sigma_between(infos[i].sub.graph, wi, infos[j].sub.graph, wj, caps);
      }
      if (link) {
        cls[j] = cid;
        members[cid].push_back(j);
        between[i][j] = link;
      }
    }
  }

  out.order = 1;
  for (const auto& info : infos) out.order *= info.order;
  for (const auto& mem : members) out.order *= factorial_big(static_cast<int>(mem.size()));

  SignedEdgeBijection id = identity_bijection(g);
  for (int i = 0; i < nb; ++i)
    for (const auto& gen : infos[i].gens)
      out.generators.push_back(embed_block_map(g, infos[i].sub, infos[i].sub, gen, id));
  for (const auto& mem : members) {
    int lead = mem.front();
    for (size_t t = 1; t < mem.size(); ++t) {
      int other = mem[t];
      const auto& link = between[lead][other];
      SignedEdgeBijection swap =
          embed_block_map(g, infos[lead].sub, infos[other].sub, *link, id);
      swap = embed_block_map(g, infos[other].sub, infos[lead].sub, inverse(*link), swap);
      out.generators.push_back(std::move(swap));
    }
  }

  std::vector<StructureTerm> class_terms;
  for (const auto& mem : members) {
    if (mem.size() == 1) {
      class_terms.push_back(infos[mem.front()].term);
      continue;
    }
    StructureTerm w;
    w.kind = StructureTerm::Kind::Wreath;
    for (int i : mem) w.parts.push_back(infos[i].term);
    StructureTerm acting;
    acting.kind = StructureTerm::Kind::Sym;
    acting.n = static_cast<int>(mem.size());
    w.acting.push_back(acting);
    class_terms.push_back(w);
  }
  if (class_terms.size() == 1) {
    out.structure = class_terms.front();
  } else {
    out.structure.kind = StructureTerm::Kind::Product;
    out.structure.parts = class_terms;
  }
  if (out.structure.order() != out.order)
    throw Error("InternalError", "structure term order mismatch");
  return out;
}

L1CheckResult l1_decomposition_check(const DirectedSymGraph& g, int samples,
                                     std::uint64_t seed) {
  std::vector<std::vector<int>> blocks = edge_components(g);
  if (blocks.size() < 2)
    throw Error("SingleComponent", "graph has a single edge component");
  FiniteMetricSpace space = graph_metric_space(g);

  std::vector<int> block_of_edge(g.und_count(), -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int k : blocks[b]) block_of_edge[k] = b;

  // Induced metric space per block.
  std::vector<Subgraph> subs;
  std::vector<FiniteMetricSpace> block_spaces;
  for (const auto& b : blocks) {
    Subgraph sub = spanned_subgraph(g, b);
    std::vector<std::vector<Rat>> d(sub.graph.vertex_count(),
                                    std::vector<Rat>(sub.graph.vertex_count()));
    for (int i = 0; i < sub.graph.vertex_count(); ++i)
      for (int j = 0; j < sub.graph.vertex_count(); ++j)
        d[i][j] = space.dist(sub.vertex_back[i], sub.vertex_back[j]);
    block_spaces.push_back(validate_metric(d, sub.graph.vertices));
    subs.push_back(std::move(sub));
  }

  // BFS tree towards the base vertex; paths in it are simple, so each one
  // meets a block in one contiguous segment.
  std::vector<int> parent(g.vertex_count(), -1), parent_edge(g.vertex_count(), -1);
  std::queue<int> bfs;
  bfs.push(0);
  parent[0] = 0;
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int id : g.out[u]) {
      int v = g.edges[id].second;
      if (parent[v] < 0) {
        parent[v] = u;
        parent_edge[v] = g.und_of[id];
        bfs.push(v);
      }
    }
  }

  std::mt19937_64 rng(seed);
  L1CheckResult result{samples, true};
  for (int s = 0; s < samples; ++s) {
    // Random molecule: a few vertices with small coefficients fixed to sum 0.
    int k = 2 + static_cast<int>(rng() % std::min(4, g.vertex_count() - 1));
    std::vector<int> verts(g.vertex_count());
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    Molecule x;
    Rat running = 0;
    for (int t = 0; t < k; ++t) {
      Rat c(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 3));
      if (t == k - 1) c = -running;
      running += c;
      x.add(space.points[verts[t]], c);
    }

    std::vector<Molecule> split(blocks.size());
    for (const auto& [label, c] : x.coeffs) {
      for (int v = space.index_of(label); v != 0; v = parent[v]) {
        Molecule& part = split[block_of_edge[parent_edge[v]]];
        part.add(space.points[v], c);
        part.add(space.points[parent[v]], -c);
      }
    }
    Rat total = free_norm(space, x).value;
    Rat sum = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
      Molecule local;
      for (const auto& [label, c] : split[b].coeffs) local.add(label, c);
      sum += free_norm(block_spaces[b], local).value;
    }
    if (sum != total) {
      result.all_equal = false;
      break;
    }
  }
  return result;
}

}  // namespace freeiso
