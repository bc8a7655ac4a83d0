#pragma once

// Decomposition of candidate inertia groups into P x| Z/m with P a normal
// Sylow p-subgroup and a cyclic prime-to-p complement.

#include <algorithm>
#include <optional>

#include "group_analysis.hpp"
#include "perm_group.hpp"

namespace wildcert {

struct InertiaDecomposition {
  PermGroup wild;   // the p-group P
  long long m = 1;  // order of the tame complement
  Perm complement;  // generator c of the complement, identity when m = 1
  int p = 2;
};

// Succeeds iff I has a normal Sylow p-subgroup with cyclic quotient of
// coprime order. The complement generator is the least qualifying element in
// canonical cycle order, so decompositions are reproducible.
inline std::optional<InertiaDecomposition> decompose_inertia(const PermGroup &I, int p,
                                                             long long enum_bound = 200000) {
  if (!is_prime(p)) throw GroupError("p must be prime");
  BigInt ppart = p_power_part(I.order(), p);
  PermGroup core = quasi_p_core(I, p);
  // p(I) is the join of all Sylow p-subgroups: it equals one exactly when
  // that Sylow subgroup is normal.
  if (core.order() != ppart) return std::nullopt;
  BigInt m_big = I.order() / ppart;
  if (m_big > enum_bound) throw GroupError("inertia group too large to decompose");
  long long m = static_cast<long long>(m_big);

  auto els = I.elements(enum_bound);
  std::sort(els.begin(), els.end(), witness_less);
  for (const Perm &c : els) {
    if (static_cast<long long>(c.order()) != m) continue;
    std::vector<Perm> gens = core.generators();
    gens.push_back(c);
    if (PermGroup(I.degree(), gens).order() == I.order())
      return InertiaDecomposition{core, m, c, p};
  }
  return std::nullopt;  // quotient by the wild part is not cyclic
}

inline bool is_purely_wild(const PermGroup &I, int p) { return is_p_power(I.order(), p); }

inline bool is_potential_inertia(const PermGroup &I, int p) {
  return decompose_inertia(I, p).has_value();
}

}  // namespace wildcert
