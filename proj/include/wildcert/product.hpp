#pragma once

// Direct products on disjoint point blocks, projections, Goursat data for
// subgroups of 2-factor products, maximal common cyclic quotients, and
// fiber products over Z/t.

#include <set>
#include <utility>
#include <vector>

#include "group_analysis.hpp"
#include "perm_group.hpp"

namespace wildcert {

struct ProductStructure {
  std::vector<int> factor_degrees;
  std::vector<int> offsets;  // offsets[i] = points before factor i
  std::vector<PermGroup> factors;
  int total_degree = 0;

  int factor_count() const { return static_cast<int>(factor_degrees.size()); }

  void check_factor(int i) const {
    if (i < 1 || i > factor_count()) throw GroupError("factor index out of range");
  }
};

inline Perm embed_at(int total_degree, int offset, const Perm &g) {
  std::vector<int> im(total_degree);
  std::iota(im.begin(), im.end(), 1);
  for (int x = 1; x <= g.degree(); ++x) im[offset + x - 1] = offset + g(x);
  return Perm::from_images(im);
}

// Factor blocks sit in listed order: factor i covers offsets[i]+1 .. offsets[i]+d_i.
inline std::pair<PermGroup, ProductStructure> direct_product(std::vector<PermGroup> factors) {
  ProductStructure ps;
  ps.offsets.push_back(0);
  for (const PermGroup &f : factors) {
    ps.factor_degrees.push_back(f.degree());
    ps.offsets.push_back(ps.offsets.back() + f.degree());
  }
  ps.total_degree = ps.offsets.back();
  ps.offsets.pop_back();
  std::vector<Perm> gens;
  for (size_t i = 0; i < factors.size(); ++i)
    for (const Perm &g : factors[i].generators())
      gens.push_back(embed_at(ps.total_degree, ps.offsets[i], g));
  ps.factors = std::move(factors);
  PermGroup prod(ps.total_degree, gens);
  return {std::move(prod), std::move(ps)};
}

// 1-based factor index.
inline Perm embed_factor(const ProductStructure &ps, int i, const Perm &g) {
  ps.check_factor(i);
  if (g.degree() != ps.factor_degrees[i - 1]) throw GroupError("factor degree mismatch");
  return embed_at(ps.total_degree, ps.offsets[i - 1], g);
}

// Whether g maps every factor block into itself.
inline bool preserves_blocks(const ProductStructure &ps, const Perm &g) {
  if (g.degree() != ps.total_degree) return false;
  for (int i = 0; i < ps.factor_count(); ++i)
    for (int x = ps.offsets[i] + 1; x <= ps.offsets[i] + ps.factor_degrees[i]; ++x)
      if (g(x) <= ps.offsets[i] || g(x) > ps.offsets[i] + ps.factor_degrees[i]) return false;
  return true;
}

// Component of g in factor i, re-indexed to 1..d_i.
inline Perm restrict_to_factor(const ProductStructure &ps, int i, const Perm &g) {
  ps.check_factor(i);
  int off = ps.offsets[i - 1], d = ps.factor_degrees[i - 1];
  std::vector<int> im(d);
  for (int x = 1; x <= d; ++x) im[x - 1] = g(off + x) - off;
  return Perm::from_images(im);
}

// Factor indices (1-based) where g acts nontrivially.
inline std::set<int> support_pattern(const ProductStructure &ps, const Perm &g) {
  if (!preserves_blocks(ps, g)) throw GroupError("element does not preserve the factor blocks");
  std::set<int> out;
  for (int i = 1; i <= ps.factor_count(); ++i)
    if (!restrict_to_factor(ps, i, g).is_identity()) out.insert(i);
  return out;
}

// Image of H under the i-th projection, on factor-local points.
inline PermGroup projection(const ProductStructure &ps, const PermGroup &H, int i) {
  ps.check_factor(i);
  std::vector<Perm> gens;
  for (const Perm &g : H.generators()) {
    if (!preserves_blocks(ps, g))
      throw GroupError("not a subgroup of the product: generator crosses factor blocks");
    Perm r = restrict_to_factor(ps, i, g);
    if (!ps.factors[i - 1].contains(r))
      throw GroupError("not a subgroup of the product: component outside factor " + std::to_string(i));
    if (!r.is_identity()) gens.push_back(r);
  }
  return PermGroup(ps.factor_degrees[i - 1], gens);
}

struct GoursatData {
  PermGroup proj1, proj2;  // factor-local
  PermGroup ker1, ker2;    // intersections with the factors, factor-local
  BigInt quotient_order = 1;
};

// Goursat decomposition of a subgroup P of a 2-factor product:
// P = proj1 x_Q proj2 with |Q| = |proj1|/|ker1| = |proj2|/|ker2|.
inline GoursatData goursat(const ProductStructure &ps, const PermGroup &P) {
  if (ps.factor_count() != 2) throw GroupError("goursat requires exactly two factors");
  PermGroup p1 = projection(ps, P, 1);
  PermGroup p2 = projection(ps, P, 2);
  std::vector<int> block1, block2;
  for (int x = 1; x <= ps.factor_degrees[0]; ++x) block1.push_back(x);
  for (int x = 1; x <= ps.factor_degrees[1]; ++x) block2.push_back(ps.offsets[1] + x);
  // kernel of the projection to factor 2 = pointwise stabilizer of block 2
  PermGroup k1_embedded = P.pointwise_stabilizer(block2);
  PermGroup k2_embedded = P.pointwise_stabilizer(block1);
  std::vector<Perm> k1g, k2g;
  for (const Perm &g : k1_embedded.generators()) k1g.push_back(restrict_to_factor(ps, 1, g));
  for (const Perm &g : k2_embedded.generators()) k2g.push_back(restrict_to_factor(ps, 2, g));
  GoursatData gd{std::move(p1), std::move(p2), PermGroup(ps.factor_degrees[0], k1g),
                 PermGroup(ps.factor_degrees[1], k2g)};
  gd.quotient_order = gd.proj1.order() / gd.ker1.order();
  if (gd.quotient_order != gd.proj2.order() / gd.ker2.order())
    throw GroupError("goursat invariant violated: mismatched quotient orders");
  if (P.order() * gd.quotient_order != gd.proj1.order() * gd.proj2.order())
    throw GroupError("goursat invariant violated: order law");
  return gd;
}

namespace detail {

// Largest power q = l^b (b <= max_b) such that H admits a surjection onto Z/q,
// decided through the normal subgroup generated by H' and the q-th powers of
// the generators.
inline long long max_prime_power_quotient(const PermGroup &H, const PermGroup &derived, long long l,
                                          int max_b) {
  for (int b = max_b; b >= 1; --b) {
    long long q = 1;
    for (int i = 0; i < b; ++i) q *= l;
    std::vector<Perm> seed = derived.generators();
    for (const Perm &g : H.generators()) seed.push_back(g.power(q));
    PermGroup N = normal_closure(H, seed);
    BigInt index = H.order() / N.order();
    if (index % q != 0) continue;
    // H/N is abelian of exponent dividing q; a generator image of order q
    // exhibits the cyclic quotient.
    for (const Perm &g : H.generators()) {
      long long e = 1;
      Perm x = g;
      while (!N.contains(x)) {
        x = x * g;
        ++e;
      }
      if (e == q) return q;
    }
  }
  return 1;
}

}  // namespace detail

// Largest divisor t of m such that a surjection H -> Z/t exists; computed per
// prime power of m and combined multiplicatively.
inline int max_cyclic_common_quotient(const PermGroup &H, int m) {
  if (m < 1) throw GroupError("m must be at least 1");
  if (m == 1 || H.is_trivial()) return 1;
  PermGroup derived = derived_subgroup(H);
  long long t = 1;
  int mm = m;
  for (int l = 2; l <= mm; ++l) {
    if (mm % l != 0) continue;
    int b = 0;
    while (mm % l == 0) {
      mm /= l;
      ++b;
    }
    t *= detail::max_prime_power_quotient(H, derived, l, b);
  }
  return static_cast<int>(t);
}

class HomomorphismError : public GroupError {
 public:
  explicit HomomorphismError(const std::string &msg) : GroupError(msg) {}
};

// Fiber product H x_{Z/t} Z/m on degree(H) + m points, where the i-th
// generator of H maps to phi[i] in Z/t and Z/m is the m-cycle on the extra
// block. phi must induce a surjective homomorphism; validated by checking
// that the graph subgroup has order |H| and that the kernel has index t.
inline PermGroup fiber_product(const PermGroup &H, int m, int t, const std::vector<int> &phi) {
  if (m < 1 || t < 1 || m % t != 0) throw GroupError("t must divide m");
  if (phi.size() != H.generators().size()) throw GroupError("phi must assign one value per generator");
  for (int v : phi)
    if (v < 0 || v >= t) throw GroupError("phi values must lie in [0, t)");

  int dH = H.degree();
  if (t > 1) {
    // graph subgroup of H x Z/t
    int dG = dH + t;
    std::vector<int> tc(t);
    for (int i = 0; i < t; ++i) tc[i] = (i + 1) % t + 1;
    Perm tcycle = Perm::from_images(tc);
    std::vector<Perm> ggens;
    for (size_t i = 0; i < phi.size(); ++i)
      ggens.push_back(embed_at(dG, 0, H.generators()[i]) * embed_at(dG, dH, tcycle.power(phi[i])));
    PermGroup graph(dG, ggens);
    if (graph.order() != H.order())
      throw HomomorphismError("phi does not extend to a homomorphism: graph order " +
                              graph.order().str() + " != " + H.order().str());
    std::vector<int> tblock;
    for (int x = dH + 1; x <= dG; ++x) tblock.push_back(x);
    PermGroup kernel = graph.pointwise_stabilizer(tblock);
    if (kernel.order() * t != H.order())
      throw HomomorphismError("phi is not surjective onto Z/" + std::to_string(t) +
                              ": kernel index is " + BigInt(H.order() / kernel.order()).str());
  }

  int dF = dH + m;
  std::vector<int> mc(m);
  for (int i = 0; i < m; ++i) mc[i] = (i + 1) % m + 1;
  Perm mcycle = Perm::from_images(mc);
  std::vector<Perm> fgens;
  for (size_t i = 0; i < H.generators().size(); ++i)
    fgens.push_back(embed_at(dF, 0, H.generators()[i]) * embed_at(dF, dH, mcycle.power(phi[i])));
  if (t < m) fgens.push_back(embed_at(dF, dH, mcycle.power(t)));
  PermGroup F(dF, fgens);
  if (F.order() * t != H.order() * m)
    throw GroupError("fiber product order law violated");
  return F;
}

// The canonical Z/t-quotient values of the generators of H, when the
// quotient's kernel is the unique index-t subgroup above H' and the t-th
// powers. Returns the kernel alongside the generator values.
struct CanonicalQuotient {
  PermGroup kernel;
  std::vector<int> phi;
};

inline CanonicalQuotient canonical_cyclic_quotient(const PermGroup &H, int t) {
  if (t == 1) {
    std::vector<int> phi(H.generators().size(), 0);
    return {H, phi};
  }
  std::vector<Perm> seed = derived_subgroup(H).generators();
  for (const Perm &g : H.generators()) seed.push_back(g.power(t));
  PermGroup N = normal_closure(H, seed);
  if (N.order() * t != H.order())
    throw GroupError("no canonical Z/" + std::to_string(t) + " quotient: kernel index " +
                     BigInt(H.order() / N.order()).str());
  // generator values: g N has some order e | t in the cyclic quotient; find a
  // generator of the quotient and express the others as its powers.
  std::vector<int> phi(H.generators().size(), 0);
  int gen_idx = -1;
  for (size_t i = 0; i < H.generators().size(); ++i) {
    const Perm &g = H.generators()[i];
    int e = 1;
    Perm x = g;
    while (!N.contains(x)) {
      x = x * g;
      ++e;
    }
    if (e == t) {
      gen_idx = static_cast<int>(i);
      break;
    }
  }
  if (gen_idx < 0) throw GroupError("canonical quotient is not cyclic of order " + std::to_string(t));
  const Perm &z = H.generators()[gen_idx];
  for (size_t i = 0; i < H.generators().size(); ++i) {
    // phi[i] = a with g z^{-a} in N
    for (int a = 0; a < t; ++a) {
      if (N.contains(H.generators()[i] * z.power(a).inverse())) {
        phi[i] = a;
        break;
      }
      if (a == t - 1) throw GroupError("generator image not a power of the quotient generator");
    }
  }
  return {N, phi};
}

}  // namespace wildcert
