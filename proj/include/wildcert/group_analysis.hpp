#pragma once

// Structural queries on permutation groups: normal closures, derived
// subgroups, the quasi-p core p(G), Sylow p-subgroups, block systems and
// primitivity, recognition of alternating/symmetric groups, and the
// order-2 witness search used by the characteristic-2 strategies.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "perm.hpp"
#include "perm_group.hpp"

namespace wildcert {

// Seed used by randomized searches when no explicit seed is supplied; the
// CLI's --seed flag sets it once at startup.
inline uint64_t &default_search_seed() {
  static uint64_t seed = 0;
  return seed;
}

// Smallest normal subgroup of G containing the given elements.
inline PermGroup normal_closure(const PermGroup &G, const std::vector<Perm> &seed) {
  std::vector<Perm> gens;
  for (const Perm &s : seed) {
    if (!G.contains(s)) throw GroupError("closure seed element lies outside the group");
    if (!s.is_identity()) gens.push_back(s);
  }
  PermGroup N(G.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      for (const Perm &g : G.generators()) {
        Perm c = conjugate(gens[i], g);
        if (!N.contains(c)) {
          gens.push_back(c);
          N = PermGroup(G.degree(), gens);
          grew = true;
        }
      }
    }
  }
  return N;
}

inline PermGroup derived_subgroup(const PermGroup &G) {
  std::vector<Perm> comms;
  const auto &gens = G.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(G, comms);
}

inline bool is_perfect(const PermGroup &G) { return derived_subgroup(G).order() == G.order(); }

// p(G): the normal subgroup generated by all Sylow p-subgroups, equivalently
// by all p-elements. Starts from the p-parts of the generators and, while the
// index is still divisible by p, pulls p-parts of random elements (an element
// whose p-part falls outside the current core always exists then).
inline PermGroup quasi_p_core(const PermGroup &G, int p, uint64_t seed);

inline PermGroup quasi_p_core(const PermGroup &G, int p) {
  return quasi_p_core(G, p, default_search_seed());
}

inline PermGroup quasi_p_core(const PermGroup &G, int p, uint64_t seed) {
  if (!is_prime(p)) throw GroupError("p must be prime");
  std::vector<Perm> gens;
  for (const Perm &g : G.generators()) {
    Perm q = p_part(g, p);
    if (!q.is_identity()) gens.push_back(q);
  }
  PermGroup N = normal_closure(G, gens);
  std::mt19937_64 rng(seed);
  int guard = 0;
  while (p_valuation(G.order() / N.order(), p) > 0) {
    if (++guard > 100000) throw GroupError("quasi-p core search failed to terminate");
    Perm x = p_part(G.random_element(rng), p);
    if (!x.is_identity() && !N.contains(x)) {
      gens.push_back(x);
      N = normal_closure(G, gens);
    }
  }
  return N;
}

inline bool is_quasi_p(const PermGroup &G, int p) {
  return quasi_p_core(G, p).order() == G.order();
}

// Subgroup of N consisting of its even permutations, via Schreier generators
// for the kernel of the sign character.
inline PermGroup even_part(const PermGroup &N) {
  std::vector<Perm> evens, odds;
  for (const Perm &g : N.generators()) (g.is_even() ? evens : odds).push_back(g);
  if (odds.empty()) return N;
  const Perm &o0 = odds.front();
  std::vector<Perm> kgens = evens;
  for (const Perm &e : evens) kgens.push_back(o0 * e * o0.inverse());
  for (const Perm &o : odds) {
    kgens.push_back(o * o0.inverse());
    kgens.push_back(o0 * o);
  }
  return PermGroup(N.degree(), kgens);
}

namespace detail {

inline std::string subgroup_key(const PermGroup &H, long long bound) {
  auto els = H.elements(bound);
  std::vector<std::vector<int>> imgs;
  for (const Perm &e : els) imgs.push_back(e.images());
  std::sort(imgs.begin(), imgs.end());
  std::string key;
  for (const auto &v : imgs)
    for (int x : v) key += static_cast<char>(x);
  return key;
}

}  // namespace detail

// N_G(H). Scans the elements of G when G is small; otherwise runs an
// orbit-stabilizer computation on the conjugates of H (H must then be
// enumerable and the orbit desk-sized).
inline PermGroup normalizer(const PermGroup &G, const PermGroup &H, long long scan_bound = 100000,
                            size_t orbit_bound = 2000000) {
  auto normalizes = [&](const Perm &g) {
    for (const Perm &h : H.generators())
      if (!H.contains(conjugate(h, g))) return false;
    return true;
  };
  if (G.order() <= scan_bound) {
    std::vector<Perm> ngens;
    PermGroup N = PermGroup::trivial(G.degree());
    for (const Perm &g : G.elements(scan_bound)) {
      if (normalizes(g) && !N.contains(g)) {
        ngens.push_back(g);
        N = PermGroup(G.degree(), ngens);
      }
    }
    return N;
  }

  if (H.order() > 4096) throw GroupError("normalizer: subgroup too large for conjugacy orbit");
  // Orbit of H under conjugation; Schreier generators stabilizing the
  // canonical form generate the normalizer.
  std::vector<Perm> ngens = H.generators();
  PermGroup N(G.degree(), ngens);
  std::map<std::string, size_t> index;
  std::vector<std::vector<Perm>> node_gens;  // generators of the conjugate subgroup
  std::vector<Perm> node_elt;                // g with H^g = node
  index[detail::subgroup_key(H, 4096)] = 0;
  node_gens.push_back(H.generators());
  node_elt.push_back(Perm::identity(G.degree()));
  for (size_t qi = 0; qi < node_gens.size(); ++qi) {
    for (const Perm &g : G.generators()) {
      std::vector<Perm> cg;
      cg.reserve(node_gens[qi].size());
      for (const Perm &h : node_gens[qi]) cg.push_back(conjugate(h, g));
      PermGroup Hc(G.degree(), cg);
      std::string key = detail::subgroup_key(Hc, 4096);
      Perm elt = node_elt[qi] * g;
      auto it = index.find(key);
      if (it == index.end()) {
        if (node_gens.size() >= orbit_bound) throw GroupError("normalizer: conjugacy orbit too large");
        index[key] = node_gens.size();
        node_gens.push_back(std::move(cg));
        node_elt.push_back(elt);
      } else {
        Perm schreier = elt * node_elt[it->second].inverse();
        if (!N.contains(schreier)) {
          ngens.push_back(schreier);
          N = PermGroup(G.degree(), ngens);
        }
      }
    }
  }
  return N;
}

// N_{S_d}(<c>) built combinatorially: centralizer generators (cycle
// rotations, swaps of equal-length cycles, the symmetric group on fixed
// points) together with one conjugator per power map c -> c^k.
inline PermGroup normalizer_of_cyclic_in_symmetric(int degree, const Perm &c) {
  if (c.degree() != degree) throw GroupError("degree mismatch");
  std::vector<Perm> gens;
  if (c.is_identity()) return symmetric_group(degree);

  std::vector<bool> seen(degree, false);
  std::vector<std::vector<int>> cycles;  // 0-based, each starting at min point
  std::vector<int> fixed;
  for (int i = 0; i < degree; ++i) {
    if (seen[i]) continue;
    if (c.image0(i) == i) {
      fixed.push_back(i);
      seen[i] = true;
      continue;
    }
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = c.image0(j);
    }
    cycles.push_back(cyc);
  }

  auto from0 = [&](const std::vector<int> &imgs0) {
    std::vector<int> v(degree);
    for (int i = 0; i < degree; ++i) v[i] = imgs0[i] + 1;
    return Perm::from_images(v);
  };

  // rotations
  for (const auto &cyc : cycles) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (size_t k = 0; k < cyc.size(); ++k) im[cyc[k]] = cyc[(k + 1) % cyc.size()];
    gens.push_back(from0(im));
  }
  // swaps of consecutive equal-length cycles
  std::map<size_t, std::vector<size_t>> by_len;
  for (size_t ci = 0; ci < cycles.size(); ++ci) by_len[cycles[ci].size()].push_back(ci);
  for (const auto &[len, idxs] : by_len)
    for (size_t t = 0; t + 1 < idxs.size(); ++t) {
      const auto &a = cycles[idxs[t]], &b = cycles[idxs[t + 1]];
      std::vector<int> im(degree);
      std::iota(im.begin(), im.end(), 0);
      for (size_t k = 0; k < len; ++k) {
        im[a[k]] = b[k];
        im[b[k]] = a[k];
      }
      gens.push_back(from0(im));
    }
  // symmetric group on the fixed points
  for (size_t t = 0; t + 1 < fixed.size(); ++t) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[fixed[t]], im[fixed[t + 1]]);
    gens.push_back(from0(im));
  }
  // power conjugators w_k with w^-1 c w = c^k, one per residue coprime to ord(c)
  long long ord = static_cast<long long>(c.order());
  for (long long k = 2; k < ord; ++k) {
    if (gcd_ll(k, ord) != 1) continue;
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    Perm ck = c.power(k);
    for (const auto &cyc : cycles) {
      // maps c^j(a) to (c^k)^j(a) for the cycle anchor a
      int x = cyc[0], y = cyc[0];
      for (size_t j = 0; j < cyc.size(); ++j) {
        im[x] = y;
        x = c.image0(x);
        y = ck.image0(y);
      }
    }
    gens.push_back(from0(im));
  }
  return PermGroup(degree, gens);
}

// p-part of |G| equals |P| and P is a p-group.
inline bool is_sylow(const PermGroup &G, const PermGroup &P, int p) {
  if (!is_prime(p)) throw GroupError("p must be prime");
  if (!is_p_power(P.order(), p)) return false;
  for (const Perm &g : P.generators())
    if (!G.contains(g)) return false;
  return P.order() == p_power_part(G.order(), p);
}

// A Sylow p-subgroup, grown through normalizers: while P is not yet full,
// some p-element of N_G(P) \ P extends it.
inline PermGroup sylow_p(const PermGroup &G, int p, uint64_t seed);

inline PermGroup sylow_p(const PermGroup &G, int p) {
  return sylow_p(G, p, default_search_seed());
}

inline PermGroup sylow_p(const PermGroup &G, int p, uint64_t seed) {
  if (!is_prime(p)) throw GroupError("p must be prime");
  BigInt target = p_power_part(G.order(), p);
  std::vector<Perm> pgens;
  PermGroup P = PermGroup::trivial(G.degree());
  std::mt19937_64 rng(seed);
  while (P.order() < target) {
    PermGroup N = P.is_trivial() ? G : normalizer(G, P);
    bool found = false;
    // deterministic pass over the generators first
    for (const Perm &g : N.generators()) {
      Perm x = p_part(g, p);
      if (!x.is_identity() && !P.contains(x)) {
        pgens.push_back(x);
        found = true;
        break;
      }
    }
    int guard = 0;
    while (!found) {
      if (++guard > 100000) throw GroupError("sylow search failed to terminate");
      Perm x = p_part(N.random_element(rng), p);
      if (!x.is_identity() && !P.contains(x)) {
        pgens.push_back(x);
        found = true;
      }
    }
    P = PermGroup(G.degree(), pgens);
  }
  return P;
}

struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // 1-based, cells sorted, by min element
  int block_size = 0;

  bool trivial(int degree) const {
    return block_size == degree || block_size == 1;
  }
};

// Finest G-invariant partition in which the two seed points share a cell
// (union-find refinement over generator images).
inline BlockSystem minimal_blocks(const PermGroup &G, int a, int b) {
  if (a == b) throw GroupError("degenerate block seed: points must differ");
  int d = G.degree();
  if (a < 1 || a > d || b < 1 || b > d) throw GroupError("point out of range");
  std::vector<int> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> queue{{a - 1, b - 1}};
  parent[find(b - 1)] = find(a - 1);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm &g : G.generators()) {
      int gx = find(g.image0(x)), gy = find(g.image0(y));
      if (gx != gy) {
        parent[gy] = gx;
        queue.push_back({gx, gy});
      }
    }
  }
  std::map<int, std::vector<int>> cells;
  for (int i = 0; i < d; ++i) cells[find(i)].push_back(i + 1);
  BlockSystem bs;
  for (auto &[root, cell] : cells) bs.blocks.push_back(cell);
  std::sort(bs.blocks.begin(), bs.blocks.end(),
            [](const auto &x, const auto &y) { return x.front() < y.front(); });
  bs.block_size = static_cast<int>(bs.blocks.front().size());
  return bs;
}

struct PrimitivityReport {
  bool transitive = false;
  bool primitive = false;
  std::string reason;
  std::optional<BlockSystem> witness;
};

inline PrimitivityReport primitivity(const PermGroup &G) {
  PrimitivityReport rep;
  rep.transitive = G.is_transitive();
  if (!rep.transitive) {
    rep.primitive = false;
    rep.reason = "intransitive";
    return rep;
  }
  if (G.degree() == 1) {
    rep.primitive = true;
    return rep;
  }
  for (int k = 2; k <= G.degree(); ++k) {
    BlockSystem bs = minimal_blocks(G, 1, k);
    if (!bs.trivial(G.degree())) {
      rep.primitive = false;
      rep.reason = "nontrivial block system with cell size " + std::to_string(bs.block_size);
      rep.witness = bs;
      return rep;
    }
  }
  rep.primitive = true;
  return rep;
}

inline bool is_primitive(const PermGroup &G) { return primitivity(G).primitive; }

enum class GroupFamily { Alt, Sym, Other };

struct Recognition {
  GroupFamily family = GroupFamily::Other;
  int degree = 0;  // moved-point count when Alt/Sym

  bool is(GroupFamily f, int d) const { return family == f && degree == d; }
};

// Order-and-parity recognition on the support of G: Sym(d) iff |G| = d!,
// Alt(d) iff |G| = d!/2 with every generator even.
inline Recognition recognize_alt_or_sym(const PermGroup &G) {
  Recognition r;
  auto supp = G.support();
  int d = static_cast<int>(supp.size());
  if (d < 2) return r;
  BigInt full = factorial(d);
  if (G.order() == full) {
    r.family = GroupFamily::Sym;
    r.degree = d;
    return r;
  }
  if (d >= 3 && 2 * G.order() == full) {
    for (const Perm &g : G.generators())
      if (!g.is_even()) return r;
    r.family = GroupFamily::Alt;
    r.degree = d;
  }
  return r;
}

struct JordanReport {
  bool transitive = false;
  bool primitive = false;
  bool has_3cycle = false;
  bool has_transposition = false;
  std::optional<Perm> three_cycle;
  std::optional<Perm> transposition;
  std::string conclusion;  // "contains Alt" | "equals Sym" | "inconclusive"
};

namespace detail {

// Searches g's powers for a single-L-cycle element (all other points fixed).
inline std::optional<Perm> single_cycle_power(const Perm &g, int len) {
  unsigned long long o = g.order();
  for (unsigned long long e = 1; e < o; ++e) {
    if (o % e != 0) continue;
    Perm h = g.power(static_cast<long long>(e));
    auto ct = h.cycle_type();
    if (ct.size() == 1 && ct[0] == len) return h;
  }
  return std::nullopt;
}

}  // namespace detail

inline JordanReport jordan_check(const PermGroup &G, long long enum_bound = 1000000) {
  JordanReport rep;
  auto prim = primitivity(G);
  rep.transitive = prim.transitive;
  rep.primitive = prim.primitive;

  auto consider = [&](const Perm &h) {
    auto ct = h.cycle_type();
    if (ct.size() == 1 && ct[0] == 3 && !rep.has_3cycle) {
      rep.has_3cycle = true;
      rep.three_cycle = h;
    }
    if (ct.size() == 1 && ct[0] == 2 && !rep.has_transposition) {
      rep.has_transposition = true;
      rep.transposition = h;
    }
  };
  for (const Perm &g : G.generators()) {
    if (auto h = detail::single_cycle_power(g, 3)) consider(*h);
    if (auto h = detail::single_cycle_power(g, 2)) consider(*h);
  }
  if ((!rep.has_3cycle || !rep.has_transposition) && G.order() <= enum_bound)
    for (const Perm &e : G.elements(enum_bound)) consider(e);

  bool odd_generator = false;
  for (const Perm &g : G.generators())
    if (!g.is_even()) odd_generator = true;

  if (rep.transitive && rep.primitive && rep.has_3cycle) {
    if (rep.has_transposition || odd_generator) {
      // a primitive group containing Alt plus an odd element is all of Sym
      rep.conclusion = "equals Sym";
    } else {
      rep.conclusion = "contains Alt";
    }
  } else {
    rep.conclusion = "inconclusive";
  }
  return rep;
}

enum class WildFlavor { Sym, Alt, S4Special };

struct WildWitness {
  Perm tau;
  WildFlavor flavor;
  bool closure_check = false;
};

class WitnessError : public GroupError {
 public:
  explicit WitnessError(const std::string &msg) : GroupError(msg) {}
};

// Picks the canonical witness element of P for the requested ambient family:
// an odd element for Sym(d), an even involution for Alt(d), a transposition
// or 4-cycle for S4. P must be a 2-group whose normal closure in the ambient
// group is everything.
inline WildWitness wild_witness(const PermGroup &P, const PermGroup &ambient, GroupFamily flavor) {
  if (!is_p_power(P.order(), 2) || P.is_trivial())
    throw WitnessError("witness source is not a nontrivial 2-group");
  PermGroup closure = normal_closure(ambient, P.generators());
  if (closure.order() != ambient.order())
    throw WitnessError("normal closure of the 2-group is a proper subgroup");

  auto els = P.elements(1 << 20);
  std::sort(els.begin(), els.end(), witness_less);

  int d = static_cast<int>(ambient.support().size());
  WildFlavor want = flavor == GroupFamily::Sym ? (d == 4 ? WildFlavor::S4Special : WildFlavor::Sym)
                                               : WildFlavor::Alt;
  // In S4 only a transposition witness leads anywhere, so those come first.
  for (int pass = 0; pass < (want == WildFlavor::S4Special ? 2 : 1); ++pass) {
    for (const Perm &x : els) {
      if (x.is_identity()) continue;
      bool ok = false;
      switch (want) {
        case WildFlavor::Sym:
          ok = !x.is_even();
          break;
        case WildFlavor::Alt:
          ok = x.is_even() && x.order() == 2;
          break;
        case WildFlavor::S4Special: {
          auto ct = x.cycle_type();
          ok = (ct.size() == 1 && ct[0] == (pass == 0 ? 2 : 4));
          break;
        }
      }
      if (!ok) continue;
      WildWitness w{x, want, false};
      PermGroup tc = normal_closure(ambient, {x});
      w.closure_check = tc.order() == ambient.order();
      if (w.closure_check) return w;
    }
  }
  throw WitnessError("no qualifying witness element in the 2-group");
}

}  // namespace wildcert
