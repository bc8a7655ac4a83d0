#pragma once

// Rule constructors and the certificate checker. Every rule has a single
// check function that works purely from serialized node data (claims,
// witnesses, premises); constructors assemble a node and must pass their own
// check. verify_certificate re-runs all checks from scratch on fresh groups.

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "group_analysis.hpp"
#include "inertia.hpp"
#include "patching.hpp"
#include "perm_group.hpp"
#include "product.hpp"

namespace wildcert {

class RuleError : public CertificateError {
 public:
  explicit RuleError(const std::string &msg) : CertificateError(msg) {}
};

namespace rule_ids {
constexpr const char *AX_PGROUP = "AX-PGROUP";
constexpr const char *AX_SYLOW = "AX-SYLOW";
constexpr const char *AX_EXT_BP = "AX-EXT-BP-A_p";
constexpr const char *AX_EXT_DK52 = "AX-EXT-DK-5.2";
constexpr const char *AX_EXT_DK56 = "AX-EXT-DK-5.6";
constexpr const char *AX_EXT_A3 = "AX-EXT-A3";
constexpr const char *AX_EXT_HKG = "AX-EXT-HKG";
constexpr const char *R_ENLARGE = "R-ENLARGE";
constexpr const char *R_PATCH_HKG = "R-PATCH-HKG";
constexpr const char *R_KUMMER = "R-KUMMER";
constexpr const char *R_RAYNAUD = "R-RAYNAUD-PATCH";
constexpr const char *R_PROD_1 = "R-PROD-1";
constexpr const char *R_PROD_2 = "R-PROD-2";
constexpr const char *R_PROD_3 = "R-PROD-3";
constexpr const char *R_GPWIC = "R-GPWIC-COMPOSE";
}  // namespace rule_ids

namespace citations {
constexpr const char *PGROUP = "classical: the inertia conjecture holds for p-groups";
constexpr const char *SYLOW = "[2] Theorem 2";
constexpr const char *BP = "[BP] Theorem 1.2";
constexpr const char *DK52 = "[DK] Theorem 5.2";
constexpr const char *DK56 = "[DK] Corollary 5.6";
constexpr const char *A3 = "A_3 is the cyclic group of order 3";
constexpr const char *HKG = "[KatzGabber]: canonical extensions realizing P x| Z/m locally";
constexpr const char *ENLARGE = "[2] Theorem 2";
constexpr const char *PRIES = "[Pries] Theorem 2.3.7";
constexpr const char *KUMMER = "[Pries] Theorem 2.3.7 with [Manish_Killing] Proposition 3.5";
constexpr const char *RAYNAUD = "[Raynaud] Theorem 2.2.3";
constexpr const char *DAS75 = "[Das] Theorem 7.5";
constexpr const char *COMPOSITUM = "[Manish_Compositum] Corollary 4.6 with [Das] Lemma 4.6";
constexpr const char *DAS47 = "[Das] Theorem 4.7";
constexpr const char *RAYNAUD222 = "[Raynaud] Corollary 2.2.2";
}  // namespace citations

namespace detail {

inline void require(bool cond, const std::string &msg) {
  if (!cond) throw RuleError(msg);
}

inline PermGroup claim_group(const Claim &c) {
  PermGroup g(c.group.degree, c.group.generators);
  require(g.order().str() == c.group.order,
          "claim group order mismatch: recorded " + c.group.order + ", recomputed " + g.order().str());
  return g;
}

inline PermGroup inertia_group(const Claim &c, size_t idx = 0) {
  require(idx < c.inertia.size(), "missing inertia entry");
  return PermGroup(c.group.degree, c.inertia[idx].generators);
}

// Kind-specific claim invariants. The generation hypothesis is recomputed
// here on every visit; require_generation relaxes it to a caller-evaluated
// claim-check for the one external axiom whose paper-side instantiation can
// break it (DK 5.2 at the smallest base case).
inline void check_claim(const Claim &c, bool require_generation = true) {
  require(is_prime(c.p), "claim p is not prime");
  PermGroup G = claim_group(c);
  require(!c.inertia.empty(), "claim has no inertia entry");
  std::vector<Perm> all_inertia_gens;
  for (const InertiaEntry &e : c.inertia) {
    for (const Perm &g : e.generators) {
      require(G.contains(g), "inertia generator lies outside the claim group");
      all_inertia_gens.push_back(g);
    }
  }
  switch (c.kind) {
    case ClaimKind::PwicPair: {
      require(c.inertia.size() == 1, "PWIC claims carry exactly one inertia group");
      PermGroup I = inertia_group(c);
      require(!I.is_trivial(), "PWIC inertia group is trivial");
      require(is_p_power(I.order(), c.p), "PWIC inertia group is not a p-group");
      if (require_generation)
        require(normal_closure(G, I.generators()).order() == G.order(),
                "generation hypothesis fails: conjugates of the inertia do not generate");
      break;
    }
    case ClaimKind::IcPair: {
      require(c.inertia.size() == 1, "IC claims carry exactly one inertia group");
      PermGroup I = inertia_group(c);
      auto dec = decompose_inertia(I, c.p);
      require(dec.has_value(), "IC inertia group does not have the inertia shape");
      require(!dec->wild.is_trivial(), "IC inertia group has trivial wild part");
      require(normal_closure(G, dec->wild.generators()).order() == G.order(),
              "generation hypothesis fails: conjugates of the wild part do not generate");
      break;
    }
    case ClaimKind::GpwicMulti: {
      std::set<std::string> labels;
      for (const InertiaEntry &e : c.inertia) {
        require(!e.label.empty(), "GPWIC inertia entries need point labels");
        require(labels.insert(e.label).second, "duplicate point label: " + e.label);
        PermGroup I(c.group.degree, e.generators);
        require(!I.is_trivial() && is_p_power(I.order(), c.p),
                "GPWIC inertia groups must be nontrivial p-groups");
      }
      require(normal_closure(G, all_inertia_gens).order() == G.order(),
              "generation hypothesis fails: conjugates of the inertia list do not generate");
      break;
    }
    case ClaimKind::HkgPair: {
      require(c.inertia.size() == 1, "HKG claims carry exactly one inertia group");
      PermGroup I = inertia_group(c);
      require(same_group(I, G), "HKG claims have inertia equal to the group");
      require(decompose_inertia(I, c.p).has_value(), "HKG inertia does not have the inertia shape");
      break;
    }
  }
}

inline const SideCondition &cond_at(const Certificate &cert, size_t i, const std::string &statement) {
  require(i < cert.side_conditions.size(), "missing side condition: " + statement);
  const SideCondition &sc = cert.side_conditions[i];
  require(sc.statement == statement, "side condition mismatch: expected '" + statement + "', found '" +
                                         sc.statement + "'");
  require(sc.status != CondStatus::Failed, "certificate contains a failed side condition");
  return sc;
}

inline void require_verified(const SideCondition &sc) {
  require(sc.status == CondStatus::Verified, "side condition must be verified: " + sc.statement);
}

inline void check_claim_checks(const Certificate &cert, const std::vector<ClaimCheck> &expected) {
  require(cert.claim_checks.size() == expected.size(), "claim-check count mismatch");
  for (size_t i = 0; i < expected.size(); ++i) {
    const ClaimCheck &a = cert.claim_checks[i], &b = expected[i];
    require(a.statement == b.statement && a.expected == b.expected && a.computed == b.computed &&
                a.holds == b.holds,
            "claim-check mismatch at '" + b.statement + "': recorded computed='" + a.computed +
                "', recomputed='" + b.computed + "'");
  }
}

// --- factor spans -----------------------------------------------------------

inline std::vector<int> span_points(const FactorSpan &span) {
  std::vector<int> pts;
  for (auto [start, len] : span)
    for (int i = 0; i < len; ++i) pts.push_back(start + i);
  return pts;
}

inline int span_degree(const FactorSpan &span) {
  int d = 0;
  for (auto [start, len] : span) d += len;
  return d;
}

inline void check_spans(const std::vector<FactorSpan> &factors, int degree) {
  std::vector<bool> used(degree, false);
  for (const FactorSpan &span : factors)
    for (auto [start, len] : span) {
      require(start >= 1 && len >= 1 && start + len - 1 <= degree, "factor interval out of range");
      for (int x = start; x < start + len; ++x) {
        require(!used[x - 1], "factor intervals overlap");
        used[x - 1] = true;
      }
    }
}

// Component of g on the span, in the span's local coordinates.
inline Perm restrict_span(const Perm &g, const FactorSpan &span) {
  auto pts = span_points(span);
  std::map<int, int> local;
  for (size_t i = 0; i < pts.size(); ++i) local[pts[i]] = static_cast<int>(i) + 1;
  std::vector<int> im(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    auto it = local.find(g(pts[i]));
    require(it != local.end(), "element does not preserve the factor span");
    im[i] = it->second;
  }
  return Perm::from_images(im);
}

inline PermGroup restrict_group(const PermGroup &G, const FactorSpan &span) {
  std::vector<Perm> gens;
  for (const Perm &g : G.generators()) gens.push_back(restrict_span(g, span));
  return PermGroup(span_degree(span), gens);
}

inline Perm embed_span(const Perm &local, const FactorSpan &span, int ambient_degree) {
  auto pts = span_points(span);
  require(static_cast<int>(pts.size()) == local.degree(), "span length differs from the local degree");
  std::vector<int> im(ambient_degree);
  std::iota(im.begin(), im.end(), 1);
  for (int x = 1; x <= local.degree(); ++x) im[pts[x - 1] - 1] = pts[local(x) - 1];
  return Perm::from_images(im);
}

inline Perm restrict_two_spans(const Perm &g, const FactorSpan &s1, const FactorSpan &s2) {
  FactorSpan joined = s1;
  joined.insert(joined.end(), s2.begin(), s2.end());
  return restrict_span(g, joined);
}

inline void require_block_diagonal(const PermGroup &G, const std::vector<FactorSpan> &factors) {
  std::vector<std::set<int>> sets;
  for (const FactorSpan &span : factors) {
    auto pts = span_points(span);
    sets.emplace_back(pts.begin(), pts.end());
  }
  for (const Perm &g : G.generators()) {
    for (int pt : g.moved_points()) {
      bool inside = false;
      for (const auto &s : sets)
        if (s.count(pt)) {
          require(s.count(g(pt)) > 0, "generator crosses a factor span");
          inside = true;
        }
      require(inside, "generator moves a point outside all factor spans");
    }
  }
}

// --- deterministic conjugators ----------------------------------------------

// w with sigma^w = target (equal cycle types); identity outside the supports.
inline Perm matching_conjugator(const Perm &sigma, const Perm &target) {
  require(sigma.cycle_type() == target.cycle_type(), "conjugator requires equal cycle types");
  int d = sigma.degree();
  auto cycles_of = [](const Perm &p) {
    std::map<int, std::vector<std::vector<int>>> by_len;
    std::vector<bool> seen(p.degree(), false);
    for (int i = 1; i <= p.degree(); ++i) {
      if (seen[i - 1] || p(i) == i) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[j - 1]) {
        seen[j - 1] = true;
        cyc.push_back(j);
        j = p(j);
      }
      by_len[static_cast<int>(cyc.size())].push_back(cyc);
    }
    return by_len;
  };
  auto ca = cycles_of(sigma), cb = cycles_of(target);
  std::vector<int> im(d, 0);
  std::vector<bool> taken(d, false);
  for (auto &[len, list_a] : ca) {
    auto &list_b = cb[len];
    for (size_t k = 0; k < list_a.size(); ++k)
      for (int x = 0; x < len; ++x) {
        im[list_a[k][x] - 1] = list_b[k][x];
        taken[list_b[k][x] - 1] = true;
      }
  }
  // common fixed points stay put; leftover fixed points pair up ascending
  for (int i = 1; i <= d; ++i)
    if (im[i - 1] == 0 && target(i) == i && !taken[i - 1]) {
      im[i - 1] = i;
      taken[i - 1] = true;
    }
  std::vector<int> free_b;
  for (int i = 1; i <= d; ++i)
    if (target(i) == i && !taken[i - 1]) free_b.push_back(i);
  size_t fb = 0;
  for (int i = 1; i <= d; ++i)
    if (im[i - 1] == 0) im[i - 1] = free_b[fb++];
  return Perm::from_images(im);
}

// Even conjugator with sigma^w = target, moving only allowed points. Parity
// is fixed with a transposition of two allowed fixed points of the target,
// or with an odd element of the centralizer of the target.
inline Perm even_matching_conjugator(const Perm &sigma, const Perm &target,
                                     const std::vector<int> &allowed) {
  Perm w = matching_conjugator(sigma, target);
  if (w.is_even()) return w;
  int d = sigma.degree();
  std::set<int> ok(allowed.begin(), allowed.end());
  std::vector<int> fixed;
  for (int pt : allowed)
    if (target(pt) == pt) fixed.push_back(pt);
  if (fixed.size() >= 2) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[fixed[0] - 1], im[fixed[1] - 1]);
    return w * Perm::from_images(im);
  }
  // odd centralizing element of the target: an even-length cycle of the
  // target, or the swap of two equal odd-length cycles
  std::map<int, std::vector<std::vector<int>>> by_len;
  std::vector<bool> seen(d, false);
  for (int i = 1; i <= d; ++i) {
    if (seen[i - 1] || target(i) == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      cyc.push_back(j);
      j = target(j);
    }
    by_len[static_cast<int>(cyc.size())].push_back(cyc);
  }
  for (auto &[len, list] : by_len) {
    if (len % 2 == 0) {
      std::vector<int> im(d);
      std::iota(im.begin(), im.end(), 1);
      for (int x = 0; x < len; ++x) im[list[0][x] - 1] = list[0][(x + 1) % len];
      return w * Perm::from_images(im);
    }
    if (list.size() >= 2) {
      std::vector<int> im(d);
      std::iota(im.begin(), im.end(), 1);
      for (int x = 0; x < len; ++x) std::swap(im[list[0][x] - 1], im[list[1][x] - 1]);
      Perm swap2 = Perm::from_images(im);
      if (!swap2.is_even()) return w * swap2;
    }
  }
  throw RuleError("no even conjugator exists for this cycle arrangement");
}

// Assembles (a-component on span1, b-component on span2) at ambient degree.
inline Perm assemble_pair(const Perm &a, const Perm &b, const FactorSpan &s1, const FactorSpan &s2,
                          int ambient_degree) {
  return embed_span(a, s1, ambient_degree) * embed_span(b, s2, ambient_degree);
}

// --- generic construction notes ---------------------------------------------
// Side conditions past a rule's required list must carry "construction:"
// statements; each is re-checked from its witness alone.

inline void check_construction(const SideCondition &sc) {
  require(sc.status == CondStatus::Verified, "construction notes must be verified");
  const std::string &s = sc.statement;
  if (s == "construction: conjugation relation") {
    Perm a = perm_from_json(sc.witness.at("a"));
    Perm by = perm_from_json(sc.witness.at("by"));
    Perm result = perm_from_json(sc.witness.at("result"));
    require(conjugate(a, by) == result, "conjugation relation fails");
  } else if (s == "construction: group is primitive") {
    PermGroup G = group_from_json(sc.witness.at("group"));
    // primitivity of the action on the support
    auto supp = G.support();
    FactorSpan span;
    for (int pt : supp) span.emplace_back(pt, 1);
    require(is_primitive(restrict_group(G, span)), "primitivity fails");
  } else if (s == "construction: recognized family") {
    PermGroup G = group_from_json(sc.witness.at("group"));
    Recognition rec = recognize_alt_or_sym(G);
    std::string fam = sc.witness.at("family").get<std::string>();
    int deg = sc.witness.at("degree").get<int>();
    require((fam == "Alt" && rec.family == GroupFamily::Alt && rec.degree == deg) ||
                (fam == "Sym" && rec.family == GroupFamily::Sym && rec.degree == deg),
            "recognition fails: expected " + fam + "(" + std::to_string(deg) + ")");
  } else if (s == "construction: element parity") {
    Perm a = perm_from_json(sc.witness.at("perm"));
    std::string parity = sc.witness.at("parity").get<std::string>();
    require((parity == "odd") == !a.is_even(), "parity witness fails");
  } else if (s == "construction: member with cycle type") {
    PermGroup G = group_from_json(sc.witness.at("group"));
    Perm a = perm_from_json(sc.witness.at("perm"));
    std::vector<int> type;
    for (const auto &x : sc.witness.at("type")) type.push_back(x.get<int>());
    require(G.contains(a) && a.cycle_type() == type, "membership/cycle-type witness fails");
  } else if (s == "construction: group order") {
    PermGroup G = group_from_json(sc.witness.at("group"));
    require(G.order().str() == sc.witness.at("order").get<std::string>(), "order witness fails");
  } else if (s == "construction: groups are equal") {
    PermGroup a = group_from_json(sc.witness.at("a"));
    PermGroup b = group_from_json(sc.witness.at("b"));
    require(same_group(a, b), "group equality witness fails");
  } else {
    throw RuleError("unknown construction note: " + s);
  }
}

inline void check_trailing_constructions(const Certificate &cert, size_t required) {
  for (size_t i = required; i < cert.side_conditions.size(); ++i) {
    require(cert.side_conditions[i].statement.rfind("construction: ", 0) == 0,
            "unexpected side condition after the rule's required list: " +
                cert.side_conditions[i].statement);
    check_construction(cert.side_conditions[i]);
  }
}

}  // namespace detail

// ===========================================================================
// Rule checkers, working purely from node data.

namespace checkers {

using detail::check_claim;
using detail::check_claim_checks;
using detail::check_spans;
using detail::check_trailing_constructions;
using detail::claim_group;
using detail::cond_at;
using detail::inertia_group;
using detail::require;
using detail::require_block_diagonal;
using detail::require_verified;
using detail::restrict_group;
using detail::restrict_span;
using detail::span_degree;
using detail::span_points;

inline void ax_p_group(const Certificate &cert) {
  require(cert.premises.empty(), "axiom node carries premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "AX-PGROUP concludes a PWIC pair");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  PermGroup I = inertia_group(cert.claim);
  require_verified(cond_at(cert, 0, "inertia group equals the claim group"));
  require(same_group(G, I), "inertia group differs from the claim group");
  require_verified(cond_at(cert, 1, "claim group is a p-group"));
  require(is_p_power(G.order(), cert.claim.p), "claim group is not a p-group");
  check_trailing_constructions(cert, 2);
  check_claim_checks(cert, {});
}

inline void ax_sylow(const Certificate &cert) {
  require(cert.premises.empty(), "axiom node carries premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "AX-SYLOW concludes a PWIC pair");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  PermGroup I = inertia_group(cert.claim);
  require_verified(cond_at(cert, 0, "claim group is a quasi-p group"));
  require(is_quasi_p(G, cert.claim.p), "claim group is not quasi-p");
  require_verified(cond_at(cert, 1, "inertia group is a Sylow p-subgroup"));
  require(is_sylow(G, I, cert.claim.p), "inertia group is not a Sylow p-subgroup");
  check_trailing_constructions(cert, 2);
  check_claim_checks(cert, {});
}

inline void ax_ext_bp(const Certificate &cert) {
  require(cert.premises.empty(), "axiom node carries premises");
  require(cert.claim.kind == ClaimKind::PwicPair || cert.claim.kind == ClaimKind::IcPair,
          "AX-EXT-BP-A_p concludes a PWIC or IC pair");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  require_verified(cond_at(cert, 0, "claim group is the alternating group of prime degree p >= 5"));
  Recognition rec = recognize_alt_or_sym(G);
  require(rec.family == GroupFamily::Alt, "claim group is not an alternating group");
  require(rec.degree == cert.claim.p, "alternating degree differs from p");
  require(cert.claim.p >= 5, "BP applies for p >= 5");
  const SideCondition &ext = cond_at(cert, 1, "realizability granted by the external theorem");
  require(ext.status == CondStatus::Assumed, "external conclusion must be recorded as assumed");
  require(ext.citation == citations::BP, "wrong citation for AX-EXT-BP-A_p");
  check_trailing_constructions(cert, 2);
  check_claim_checks(cert, {});
}

inline void ax_ext_a3(const Certificate &cert) {
  require(cert.premises.empty(), "axiom node carries premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "AX-EXT-A3 concludes a PWIC pair");
  require(cert.claim.p == 3, "AX-EXT-A3 requires p = 3");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  PermGroup I = inertia_group(cert.claim);
  require_verified(cond_at(cert, 0, "claim group is cyclic of order 3 on three points"));
  require(G.order() == 3 && G.support().size() == 3, "claim group is not A3-shaped");
  require(same_group(G, I), "inertia differs from the group");
  check_trailing_constructions(cert, 1);
  check_claim_checks(cert, {});
}

inline void ax_ext_dk56(const Certificate &cert) {
  require(cert.premises.empty(), "axiom node carries premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "AX-EXT-DK-5.6 concludes a PWIC pair");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  PermGroup I = inertia_group(cert.claim);
  int p = cert.claim.p;
  require(p % 2 == 1, "DK-5.6 requires an odd prime");
  require_verified(cond_at(cert, 0, "claim group is the alternating group on r*p points"));
  Recognition rec = recognize_alt_or_sym(G);
  require(rec.family == GroupFamily::Alt, "claim group is not an alternating group");
  require(rec.degree % p == 0, "alternating degree is not a multiple of p");
  int r = rec.degree / p;
  require(r >= 2, "DK-5.6 requires r >= 2");
  const SideCondition &gen = cond_at(cert, 1, "inertia is generated by u < r disjoint p-cycles");
  require_verified(gen);
  Perm sigma = perm_from_json(gen.witness.at("sigma"));
  require(same_group(PermGroup(G.degree(), {sigma}), I),
          "recorded sigma does not generate the inertia group");
  auto ct = sigma.cycle_type();
  int u = static_cast<int>(ct.size());
  for (int len : ct) require(len == p, "inertia generator is not a product of p-cycles");
  require(u >= 1 && u < r, "DK-5.6 requires 1 <= u < r");
  const SideCondition &ext = cond_at(cert, 2, "realizability granted by the external theorem");
  require(ext.status == CondStatus::Assumed && ext.citation == citations::DK56,
          "external conclusion must cite DK Corollary 5.6");
  check_trailing_constructions(cert, 3);
  check_claim_checks(cert, {});
}

inline void ax_ext_hkg(const Certificate &cert) {
  require(cert.premises.empty(), "axiom node carries premises");
  require(cert.claim.kind == ClaimKind::HkgPair, "AX-EXT-HKG concludes an HKG pair");
  check_claim(cert.claim);
  const SideCondition &shape = cond_at(cert, 0, "group has the inertia shape P x| Z/m");
  require_verified(shape);
  PermGroup I = claim_group(cert.claim);
  auto dec = decompose_inertia(I, cert.claim.p);
  require(dec.has_value(), "group does not decompose");
  require(group_from_json(shape.witness.at("wild")).order() == dec->wild.order(),
          "recorded wild part order mismatch");
  require(shape.witness.at("m").get<long long>() == dec->m, "recorded tame order mismatch");
  check_trailing_constructions(cert, 1);
  check_claim_checks(cert, {});
}

struct ProductContext {
  std::vector<FactorSpan> factors;
  PermGroup factor1, factor2;
  PermGroup product;  // the group carrying the blocks witness
};

inline ProductContext product_context(const Claim &product_claim, const SideCondition &blocks_cond) {
  ProductContext ctx{blocks_from_json(blocks_cond.witness.at("blocks")),
                     PermGroup::trivial(1), PermGroup::trivial(1), claim_group(product_claim)};
  require(ctx.factors.size() == 2, "two factor spans expected");
  check_spans(ctx.factors, product_claim.group.degree);
  require_block_diagonal(ctx.product, ctx.factors);
  ctx.factor1 = restrict_group(ctx.product, ctx.factors[0]);
  ctx.factor2 = restrict_group(ctx.product, ctx.factors[1]);
  require(ctx.product.order() == ctx.factor1.order() * ctx.factor2.order(),
          "claim group is not the direct product of its factor restrictions");
  return ctx;
}

inline void ax_ext_dk52(const Certificate &cert) {
  require(cert.premises.size() == 2, "DK-5.2 takes the two factor-pair premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "AX-EXT-DK-5.2 concludes a PWIC pair");
  check_claim(cert.claim, /*require_generation=*/false);
  int p = cert.claim.p;
  int D = cert.claim.group.degree;
  require(p % 2 == 1, "DK-5.2 is applied at odd primes here");
  ProductContext ctx =
      product_context(cert.claim, cond_at(cert, 0, "claim group is a two-factor product of alternating groups"));
  require_verified(cert.side_conditions[0]);
  Recognition r1 = recognize_alt_or_sym(ctx.factor1), r2 = recognize_alt_or_sym(ctx.factor2);
  require(r1.family == GroupFamily::Alt && r1.degree == span_degree(ctx.factors[0]),
          "first factor is not the full alternating group on its span");
  require(r2.family == GroupFamily::Alt && r2.degree == span_degree(ctx.factors[1]),
          "second factor is not the full alternating group on its span");
  require(span_degree(ctx.factors[1]) == p, "second factor must have degree p");

  const SideCondition &lam = cond_at(cert, 1, "inertia generator splits into order-p components");
  require_verified(lam);
  PermGroup I = inertia_group(cert.claim);
  require(I.generators().size() == 1, "inertia must be cyclic for DK-5.2");
  Perm lam_full = I.generators()[0];
  Perm lambda1 = restrict_span(lam_full, ctx.factors[0]);
  Perm lambda2 = restrict_span(lam_full, ctx.factors[1]);
  // recorded as ambient components so the witness survives transplanting
  require(perm_from_json(lam.witness.at("lambda1")) ==
              detail::embed_span(lambda1, ctx.factors[0], cert.claim.group.degree),
          "lambda1 mismatch");
  require(perm_from_json(lam.witness.at("lambda2")) ==
              detail::embed_span(lambda2, ctx.factors[1], cert.claim.group.degree),
          "lambda2 mismatch");
  require(lambda1.order() == static_cast<unsigned long long>(p) &&
              lambda2.order() == static_cast<unsigned long long>(p),
          "inertia components must have order p");
  for (int len : lambda1.cycle_type()) require(len == p, "lambda1 is not a product of p-cycles");
  require(lambda2.cycle_type() == std::vector<int>{p}, "lambda2 is not a single p-cycle");

  const Claim &c1 = cert.premises[0].claim, &c2 = cert.premises[1].claim;
  require(c1.kind == ClaimKind::PwicPair && c2.kind == ClaimKind::PwicPair,
          "DK-5.2 premises must be PWIC pairs");
  require(c1.p == p && c2.p == p, "premise prime mismatch");
  require(same_group(claim_group(c1), ctx.factor1), "first premise group differs from factor 1");
  require(same_group(claim_group(c2), ctx.factor2), "second premise group differs from factor 2");
  require(same_group(inertia_group(c1), PermGroup(span_degree(ctx.factors[0]), {lambda1})),
          "first premise inertia differs from <lambda1>");
  require(same_group(inertia_group(c2), PermGroup(span_degree(ctx.factors[1]), {lambda2})),
          "second premise inertia differs from <lambda2>");

  const SideCondition &aut = cond_at(cert, 2, "an automorphism carries each power pair to the inertia generator");
  require_verified(aut);
  const Json &conj = aut.witness.at("conjugators");
  require(static_cast<int>(conj.size()) == std::max(0, p - 2), "expected p-2 conjugator witnesses");
  for (int a = 2; a <= p - 1; ++a) {
    Perm ga = perm_from_json(conj.at(a - 2));
    for (const FactorSpan &span : ctx.factors) {
      auto pts = span_points(span);
      std::set<int> s(pts.begin(), pts.end());
      for (int x : pts) require(s.count(ga(x)) > 0, "conjugator crosses factor spans");
    }
    Perm pair_a = detail::assemble_pair(lambda1.power(a), lambda2, ctx.factors[0], ctx.factors[1], D);
    require(conjugate(pair_a, ga) == lam_full, "conjugator fails to map the power pair to the inertia");
  }

  std::vector<ClaimCheck> expect;
  bool perf = is_perfect(ctx.factor1) && is_perfect(ctx.factor2);
  expect.push_back({"both factors are perfect", "true", perf ? "true" : "false", perf});
  {
    BigInt closure = normal_closure(ctx.product, I.generators()).order();
    bool holds = closure == ctx.product.order();
    expect.push_back({"conjugates of the inertia generate the product",
                      "order " + ctx.product.order().str(), "order " + closure.str(), holds});
  }
  check_trailing_constructions(cert, 3);
  check_claim_checks(cert, expect);
}

inline void r_enlarge(const Certificate &cert) {
  require(cert.premises.size() == 1, "R-ENLARGE takes one premise");
  const Certificate &prem = cert.premises[0];
  require(cert.claim.kind == prem.claim.kind, "R-ENLARGE preserves the claim kind");
  require(cert.claim.p == prem.claim.p, "prime mismatch");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  require_verified(cond_at(cert, 0, "premise and claim concern the same group"));
  require(same_group(G, claim_group(prem.claim)), "premise group differs from the claim group");
  PermGroup I_from = inertia_group(prem.claim);
  PermGroup I_to = inertia_group(cert.claim);
  if (cert.claim.kind == ClaimKind::PwicPair) {
    const SideCondition &sc = cond_at(cert, 1, "conjugated premise inertia lies inside the claim inertia");
    require_verified(sc);
    Perm w = perm_from_json(sc.witness.at("conjugator"));
    require(G.contains(w), "conjugator lies outside the group");
    for (const Perm &g : I_from.generators())
      require(I_to.contains(conjugate(g, w)), "conjugated premise inertia escapes the claim inertia");
  } else {
    require(cert.claim.kind == ClaimKind::IcPair, "R-ENLARGE applies to PWIC or IC claims");
    const SideCondition &sc = cond_at(cert, 1, "wild parts nest under a shared tame generator");
    require_verified(sc);
    Perm beta = perm_from_json(sc.witness.at("beta"));
    auto dec_from = decompose_inertia(I_from, cert.claim.p);
    auto dec_to = decompose_inertia(I_to, cert.claim.p);
    require(dec_from.has_value() && dec_to.has_value(), "inertia groups do not decompose");
    require(dec_from->m == dec_to->m, "tame orders differ");
    require(static_cast<long long>(beta.order()) == dec_from->m, "beta order differs from the tame order");
    require(subgroup_of(dec_from->wild, dec_to->wild),
            "premise wild part is not contained in the claim wild part");
    for (const PermGroup *P : {&dec_from->wild, &dec_to->wild})
      for (const Perm &g : P->generators())
        require(P->contains(conjugate(g, beta)), "beta does not normalize a wild part");
    std::vector<Perm> g1 = dec_from->wild.generators();
    g1.push_back(beta);
    require(PermGroup(G.degree(), g1).order() == I_from.order(),
            "beta does not complement the premise wild part");
    std::vector<Perm> g2 = dec_to->wild.generators();
    g2.push_back(beta);
    require(PermGroup(G.degree(), g2).order() == I_to.order(),
            "beta does not complement the claim wild part");
  }
  check_trailing_constructions(cert, 2);
  check_claim_checks(cert, {});
}

inline void r_patch_hkg(const Certificate &cert) {
  require(cert.premises.size() == 2, "R-PATCH-HKG takes two premises");
  require(cert.claim.kind == ClaimKind::IcPair, "R-PATCH-HKG concludes an IC pair");
  check_claim(cert.claim);
  const Certificate &p1 = cert.premises[0], &p2 = cert.premises[1];
  require(p1.claim.kind == ClaimKind::PwicPair, "first premise must be a PWIC pair");
  require(p2.claim.kind == ClaimKind::IcPair || p2.claim.kind == ClaimKind::HkgPair,
          "second premise must be an IC or HKG pair");
  require(p1.claim.p == cert.claim.p && p2.claim.p == cert.claim.p, "prime mismatch");
  int p = cert.claim.p;
  PermGroup G = claim_group(cert.claim);
  PermGroup I = inertia_group(cert.claim);
  PermGroup G1 = claim_group(p1.claim);
  PermGroup G2 = claim_group(p2.claim);

  const SideCondition &tau_c = cond_at(cert, 0, "first premise inertia is cyclic of order p");
  require_verified(tau_c);
  Perm tau = perm_from_json(tau_c.witness.at("tau"));
  require(static_cast<int>(tau.order()) == p, "tau does not have order p");
  require(same_group(PermGroup(G.degree(), {tau}), inertia_group(p1.claim)),
          "tau does not generate the first premise inertia");

  const SideCondition &dec_c = cond_at(cert, 1, "claim inertia is tau extended by a tame cyclic complement");
  require_verified(dec_c);
  require(same_group(I, inertia_group(p2.claim)), "claim inertia differs from the second premise inertia");
  auto dec = decompose_inertia(I, p);
  require(dec.has_value(), "claim inertia does not decompose");
  require(same_group(dec->wild, PermGroup(G.degree(), {tau})), "wild part of the inertia is not <tau>");
  require(dec_c.witness.at("m").get<long long>() == dec->m, "recorded tame order mismatch");
  require(perm_from_json(dec_c.witness.at("c")) == dec->complement,
          "recorded complement differs from the canonical one");

  require_verified(cond_at(cert, 2, "the premise groups generate the claim group"));
  std::vector<Perm> jg = G1.generators();
  jg.insert(jg.end(), G2.generators().begin(), G2.generators().end());
  require(same_group(PermGroup(G.degree(), jg), G), "premise groups do not generate the claim group");

  const SideCondition &num_c = cond_at(cert, 3, "numerical patching hypothesis");
  require_verified(num_c);
  auto els = I.elements(200000);
  long long center = 0;
  for (const Perm &z : els) {
    bool commutes = true;
    for (const Perm &g : I.generators())
      if (z * g != g * z) {
        commutes = false;
        break;
      }
    if (commutes) ++center;
  }
  long long m_prime = center;
  while (m_prime % p == 0) m_prime /= p;
  require(num_c.witness.at("m_prime").get<long long>() == m_prime, "recorded m' mismatch");
  const Json &pj = num_c.witness.at("params");
  PatchingParams re = derive_params(p, static_cast<int>(dec->m), static_cast<int>(m_prime),
                                    pj.at("h1_prime").get<int>(), pj.at("h2").get<int>());
  require(re.gamma == pj.at("gamma").get<long long>() && re.h1 == pj.at("h1").get<long long>() &&
              re.e == pj.at("e").get<long long>(),
          "recorded patching parameters differ from the derived ones");
  re.assert_invariants();
  check_trailing_constructions(cert, 4);
  check_claim_checks(cert, {});
}

inline void r_raynaud(const Certificate &cert) {
  require(!cert.premises.empty(), "R-RAYNAUD-PATCH needs at least one premise");
  require(cert.claim.kind == ClaimKind::PwicPair, "R-RAYNAUD-PATCH concludes a PWIC pair");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  PermGroup I = inertia_group(cert.claim);
  std::vector<Perm> joing, joini;
  for (const Certificate &prem : cert.premises) {
    require(prem.claim.kind == ClaimKind::PwicPair, "premises must be PWIC pairs");
    require(prem.claim.p == cert.claim.p, "prime mismatch");
    require(prem.claim.group.degree == cert.claim.group.degree, "degree mismatch");
    PermGroup Gi = claim_group(prem.claim);
    PermGroup Ii = inertia_group(prem.claim);
    joing.insert(joing.end(), Gi.generators().begin(), Gi.generators().end());
    joini.insert(joini.end(), Ii.generators().begin(), Ii.generators().end());
  }
  require_verified(cond_at(cert, 0, "the premise groups generate the claim group"));
  require(same_group(PermGroup(G.degree(), joing), G), "premise groups do not generate the claim group");
  require_verified(cond_at(cert, 1, "the premise inertia groups join to the claim inertia, a p-group"));
  require(same_group(PermGroup(G.degree(), joini), I),
          "premise inertia groups do not join to the claim inertia");
  require(is_p_power(I.order(), cert.claim.p), "joined inertia is not a p-group");
  check_trailing_constructions(cert, 2);
  check_claim_checks(cert, {});
}

inline void r_kummer(const Certificate &cert) {
  require(cert.premises.size() == 1, "R-KUMMER takes one premise");
  require(cert.claim.kind == ClaimKind::PwicPair, "R-KUMMER concludes a PWIC pair");
  const Certificate &prem = cert.premises[0];
  require(prem.claim.kind == ClaimKind::PwicPair, "premise must be a PWIC pair");
  require(prem.claim.p == cert.claim.p, "prime mismatch");
  require(prem.claim.group.degree == cert.claim.group.degree, "degree mismatch");
  check_claim(cert.claim);
  int p = cert.claim.p;
  int D = cert.claim.group.degree;

  ProductContext ctx = product_context(
      prem.claim, cond_at(cert, 0, "premise group is a direct product over the factor blocks"));
  require_verified(cert.side_conditions[0]);

  const SideCondition &lam_c = cond_at(cert, 1, "inertia components have order p");
  require_verified(lam_c);
  PermGroup I_prem = inertia_group(prem.claim);
  require(I_prem.generators().size() == 1, "premise inertia must be cyclic");
  Perm lam = I_prem.generators()[0];
  Perm lambda1 = restrict_span(lam, ctx.factors[0]);
  Perm lambda2 = restrict_span(lam, ctx.factors[1]);
  require(perm_from_json(lam_c.witness.at("lambda1")) ==
              detail::embed_span(lambda1, ctx.factors[0], D),
          "lambda1 mismatch");
  require(perm_from_json(lam_c.witness.at("lambda2")) ==
              detail::embed_span(lambda2, ctx.factors[1], D),
          "lambda2 mismatch");
  require(lambda1.order() == static_cast<unsigned long long>(p) &&
              lambda2.order() == static_cast<unsigned long long>(p),
          "inertia components must have order p");

  const SideCondition &c_c = cond_at(cert, 2, "c has prime-to-p order and normalizes the inertia");
  require_verified(c_c);
  Perm c = perm_from_json(c_c.witness.at("c"));
  long long m = c_c.witness.at("m").get<long long>();
  require(static_cast<long long>(c.order()) == m, "recorded order of c mismatch");
  require(m % p != 0, "order of c is divisible by p");
  int power = c_c.witness.at("power").get<int>();
  require(power >= 1 && conjugate(lam, c) == lam.power(power), "c does not normalize the inertia as recorded");

  const SideCondition &h_c = cond_at(cert, 3, "H is generated by the product and c");
  require_verified(h_c);
  std::vector<Perm> hgens = ctx.product.generators();
  hgens.push_back(c);
  PermGroup H(D, hgens);
  require(same_group(H, group_from_json(h_c.witness.at("H"))), "recorded H differs from the generated join");

  const SideCondition &t_c = cond_at(cert, 4, "maximal common cyclic quotient of H and <c>");
  require_verified(t_c);
  int t = t_c.witness.at("t").get<int>();
  require(max_cyclic_common_quotient(H, static_cast<int>(m)) == t, "recorded t mismatch");

  const SideCondition &f_c = cond_at(cert, 5, "fiber product satisfies the order law");
  require_verified(f_c);
  auto cq = canonical_cyclic_quotient(H, t);
  PermGroup F = fiber_product(H, static_cast<int>(m), t, cq.phi);
  require(same_group(F, group_from_json(f_c.witness.at("F"))),
          "recorded fiber product differs from the reconstruction");
  require(F.order() * t == H.order() * m, "fiber product order law fails");

  const SideCondition &k_c = cond_at(cert, 6, "kernel of the canonical quotient of H");
  require_verified(k_c);
  require(same_group(cq.kernel, group_from_json(k_c.witness.at("K"))),
          "recorded kernel differs from the reconstruction");

  PermGroup I_out = inertia_group(cert.claim);
  require(same_group(I_out, I_prem), "output inertia differs from the premise inertia");
  PermGroup G_out = claim_group(cert.claim);
  require(G_out.contains(lam), "output group does not contain the inertia generator");

  std::vector<ClaimCheck> expect;
  {
    BigInt full = factorial(static_cast<int>(H.support().size()));
    bool holds = H.order() == full;
    expect.push_back({"H is the full symmetric group on its support", "order " + full.str(),
                      "order " + H.order().str(), holds});
  }
  {
    bool holds = same_group(cq.kernel, G_out);
    expect.push_back({"the canonical quotient kernel equals the output group",
                      "order " + G_out.order().str(), "order " + BigInt(cq.kernel.order()).str(), holds});
  }
  if (span_degree(ctx.factors[0]) == span_degree(ctx.factors[1])) {
    Perm swapped = detail::assemble_pair(lambda2, lambda1, ctx.factors[0], ctx.factors[1], D);
    bool holds = conjugate(lam, c) == swapped;
    expect.push_back({"c exchanges the two inertia components", "true", holds ? "true" : "false",
                      holds});
  }
  check_trailing_constructions(cert, 7);
  check_claim_checks(cert, expect);
}

inline void r_prod_1(const Certificate &cert) {
  require(cert.premises.size() == 2, "R-PROD-1 takes two premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "R-PROD-1 concludes a PWIC pair");
  check_claim(cert.claim);
  int p = cert.claim.p;
  int D = cert.claim.group.degree;
  ProductContext ctx =
      product_context(cert.claim, cond_at(cert, 0, "claim group is a two-factor direct product"));
  require_verified(cert.side_conditions[0]);
  const Claim &c1 = cert.premises[0].claim, &c2 = cert.premises[1].claim;
  require(c1.kind == ClaimKind::PwicPair && c2.kind == ClaimKind::PwicPair, "premises must be PWIC pairs");
  require(c1.p == p && c2.p == p, "premise prime mismatch");
  require(same_group(claim_group(c1), ctx.factor1), "first premise group differs from factor 1");
  require(same_group(claim_group(c2), ctx.factor2), "second premise group differs from factor 2");

  require_verified(cond_at(cert, 1, "both factors are perfect"));
  require(is_perfect(ctx.factor1), "first factor is not perfect");
  require(is_perfect(ctx.factor2), "second factor is not perfect");

  PermGroup I = inertia_group(cert.claim);
  require(I.generators().size() == 1, "inertia must be cyclic of order p");
  Perm lam = I.generators()[0];
  require(static_cast<int>(lam.order()) == p, "inertia generator must have order p");
  Perm lambda1 = restrict_span(lam, ctx.factors[0]);
  Perm lambda2 = restrict_span(lam, ctx.factors[1]);
  require(same_group(inertia_group(c1), PermGroup(span_degree(ctx.factors[0]), {lambda1})),
          "first premise inertia differs from <lambda1>");
  require(same_group(inertia_group(c2), PermGroup(span_degree(ctx.factors[1]), {lambda2})),
          "second premise inertia differs from <lambda2>");

  const SideCondition &aut = cond_at(cert, 2, "an automorphism carries each power pair to the inertia generator");
  if (aut.status == CondStatus::Assumed) {
    require(aut.citation == citations::DK52, "assumed automorphism condition must cite DK 5.2");
  } else {
    require_verified(aut);
    const Json &conj = aut.witness.at("conjugators");
    require(static_cast<int>(conj.size()) == std::max(0, p - 2), "expected p-2 conjugator witnesses");
    for (int a = 2; a <= p - 1; ++a) {
      Perm ga = perm_from_json(conj.at(a - 2));
      for (const Perm &g : ctx.product.generators())
        require(ctx.product.contains(conjugate(g, ga)), "conjugator does not normalize the product");
      Perm pair_a = detail::assemble_pair(lambda1.power(a), lambda2, ctx.factors[0], ctx.factors[1], D);
      require(conjugate(pair_a, ga) == lam, "conjugator fails on a power pair");
    }
  }
  check_trailing_constructions(cert, 3);
  check_claim_checks(cert, {});
}

// Recognized quotient-lattice families for the no-common-quotient decision.
struct FamilyTag {
  enum Kind { Alt, Sym, Cyclic, Unknown } kind = Unknown;
  int n = 0;
};

inline FamilyTag family_of(const PermGroup &G) {
  Recognition rec = recognize_alt_or_sym(G);
  if (rec.family == GroupFamily::Alt && rec.degree >= 5) return {FamilyTag::Alt, rec.degree};
  if (rec.family == GroupFamily::Sym && rec.degree != 4) return {FamilyTag::Sym, rec.degree};
  if (G.order() <= 10000) {
    long long n = static_cast<long long>(BigInt(G.order()));
    for (const Perm &e : G.elements(10000))
      if (static_cast<long long>(e.order()) == n) return {FamilyTag::Cyclic, static_cast<int>(n)};
  }
  return {FamilyTag::Unknown, 0};
}

// Nontrivial quotients: Alt(d>=5): {A_d}; Sym(d), d != 4: {C2, S_d};
// Cyclic(n): cyclic groups of the divisors. Refuses outside these families.
inline bool no_common_quotient(const FamilyTag &a, const FamilyTag &b) {
  require(a.kind != FamilyTag::Unknown && b.kind != FamilyTag::Unknown,
          "cannot decide common quotients outside recognized families");
  if (a.kind == FamilyTag::Alt && b.kind == FamilyTag::Alt) return a.n != b.n;
  if (a.kind == FamilyTag::Sym && b.kind == FamilyTag::Sym) return false;  // shared C2
  if (a.kind == FamilyTag::Alt || b.kind == FamilyTag::Alt) return true;
  long long na = a.kind == FamilyTag::Sym ? 2 : a.n;
  long long nb = b.kind == FamilyTag::Sym ? 2 : b.n;
  return gcd_ll(na, nb) == 1;
}

inline void r_prod_2(const Certificate &cert) {
  require(cert.premises.size() == 2, "R-PROD-2 takes two premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "R-PROD-2 concludes a PWIC pair");
  check_claim(cert.claim);
  int p = cert.claim.p;
  ProductContext ctx =
      product_context(cert.claim, cond_at(cert, 0, "claim group is a two-factor direct product"));
  require_verified(cert.side_conditions[0]);
  const Claim &c1 = cert.premises[0].claim, &c2 = cert.premises[1].claim;
  require(c1.kind == ClaimKind::PwicPair && c2.kind == ClaimKind::PwicPair, "premises must be PWIC pairs");
  require(c1.p == p && c2.p == p, "premise prime mismatch");
  require(same_group(claim_group(c1), ctx.factor1), "first premise group differs from factor 1");
  require(same_group(claim_group(c2), ctx.factor2), "second premise group differs from factor 2");

  require_verified(cond_at(cert, 1, "the factors admit no common nontrivial quotient"));
  require(no_common_quotient(family_of(ctx.factor1), family_of(ctx.factor2)),
          "factors share a nontrivial quotient");

  require_verified(cond_at(cert, 2, "the inertia projections match the premise inertia groups"));
  PermGroup Q = inertia_group(cert.claim);
  std::vector<Perm> q1, q2;
  for (const Perm &g : Q.generators()) {
    q1.push_back(restrict_span(g, ctx.factors[0]));
    q2.push_back(restrict_span(g, ctx.factors[1]));
  }
  require(same_group(PermGroup(span_degree(ctx.factors[0]), q1), inertia_group(c1)),
          "first projection of the inertia differs from the premise inertia");
  require(same_group(PermGroup(span_degree(ctx.factors[1]), q2), inertia_group(c2)),
          "second projection of the inertia differs from the premise inertia");
  require(c1.inertia.at(0).generators.size() == 1 && c2.inertia.at(0).generators.size() == 1,
          "premise inertia groups must be cyclic");
  check_trailing_constructions(cert, 3);
  check_claim_checks(cert, {});
}

inline void r_prod_3(const Certificate &cert) {
  require(cert.premises.size() == 2, "R-PROD-3 takes two premises");
  require(cert.claim.kind == ClaimKind::PwicPair, "R-PROD-3 concludes a PWIC pair");
  check_claim(cert.claim);
  int p = cert.claim.p;
  ProductContext ctx =
      product_context(cert.claim, cond_at(cert, 0, "claim group is a two-factor direct product"));
  require_verified(cert.side_conditions[0]);
  const Claim &c1 = cert.premises[0].claim, &c2 = cert.premises[1].claim;
  require(c1.kind == ClaimKind::PwicPair && c2.kind == ClaimKind::PwicPair, "premises must be PWIC pairs");
  require(c1.p == p && c2.p == p, "premise prime mismatch");
  require(same_group(claim_group(c1), ctx.factor1), "first premise group differs from factor 1");
  require(same_group(claim_group(c2), ctx.factor2), "second premise group differs from factor 2");

  require_verified(cond_at(cert, 1, "both factors are perfect"));
  require(is_perfect(ctx.factor1), "first factor is not perfect");
  require(is_perfect(ctx.factor2), "second factor is not perfect");

  PermGroup P = inertia_group(cert.claim);
  std::vector<Perm> p1g, p2g;
  for (const Perm &g : P.generators()) {
    p1g.push_back(restrict_span(g, ctx.factors[0]));
    p2g.push_back(restrict_span(g, ctx.factors[1]));
  }
  require(same_group(PermGroup(span_degree(ctx.factors[0]), p1g), inertia_group(c1)),
          "first premise inertia differs from the projection of P");
  require(same_group(PermGroup(span_degree(ctx.factors[1]), p2g), inertia_group(c2)),
          "second premise inertia differs from the projection of P");

  const SideCondition &gc = cond_at(cert, 2, "goursat decomposition of the inertia");
  require_verified(gc);
  std::vector<Perm> local;
  for (const Perm &g : P.generators())
    local.push_back(detail::restrict_two_spans(g, ctx.factors[0], ctx.factors[1]));
  auto [prod, ps] = direct_product({ctx.factor1, ctx.factor2});
  GoursatData gd = goursat(ps, PermGroup(ps.total_degree, local));
  require(gc.witness.at("quotient_order").get<std::string>() == gd.quotient_order.str(),
          "recorded goursat quotient order mismatch");

  const SideCondition &pc = cond_at(cert, 3, "compositum patching applies");
  require(pc.status == CondStatus::Assumed && pc.citation == citations::COMPOSITUM,
          "compositum step must be assumed with its citation");
  check_trailing_constructions(cert, 4);
  check_claim_checks(cert, {});
}

inline void r_gpwic(const Certificate &cert) {
  require(!cert.premises.empty(), "R-GPWIC-COMPOSE needs premises");
  require(cert.claim.kind == ClaimKind::GpwicMulti, "R-GPWIC-COMPOSE concludes a GPWIC claim");
  check_claim(cert.claim);
  PermGroup G = claim_group(cert.claim);
  require(cert.premises.size() == cert.claim.inertia.size(),
          "one premise per labeled inertia group expected");
  std::vector<Perm> join;
  for (size_t j = 0; j < cert.premises.size(); ++j) {
    const Certificate &prem = cert.premises[j];
    require(prem.claim.kind == ClaimKind::PwicPair, "premises must be PWIC pairs");
    require(prem.claim.p == cert.claim.p, "premise prime mismatch");
    require(prem.claim.group.degree == cert.claim.group.degree, "degree mismatch");
    PermGroup Gj = claim_group(prem.claim);
    for (const Perm &g : Gj.generators()) {
      require(G.contains(g), "premise group is not a subgroup of the claim group");
      join.push_back(g);
    }
    require(same_group(inertia_group(prem.claim),
                       PermGroup(G.degree(), cert.claim.inertia[j].generators)),
            "premise inertia differs from the labeled inertia entry");
  }
  require_verified(cond_at(cert, 0, "the premise groups generate the claim group"));
  require(same_group(PermGroup(G.degree(), join), G), "premise groups do not generate the claim group");
  const SideCondition &pc = cond_at(cert, 1, "inductive multi-point patching applies");
  require(pc.status == CondStatus::Assumed && pc.citation == citations::DAS47,
          "composition step must be assumed with its citation");
  check_trailing_constructions(cert, 2);
  check_claim_checks(cert, {});
}

}  // namespace checkers

// ===========================================================================
// Rule constructors.

inline void check_certificate_node(const Certificate &cert);

namespace build {

inline Claim make_claim(ClaimKind kind, int p, const PermGroup &G,
                        std::vector<InertiaEntry> inertia, std::string structure = "") {
  Claim c;
  c.kind = kind;
  c.p = p;
  c.group = make_group_data(G, std::move(structure));
  c.inertia = std::move(inertia);
  return c;
}

inline InertiaEntry entry(const PermGroup &I, std::string label = "") {
  return InertiaEntry{I.generators(), std::move(label)};
}

inline Certificate finish(Certificate cert) {
  check_certificate_node(cert);
  return cert;
}

inline std::vector<FactorSpan> spans_of(const std::vector<std::pair<int, int>> &blocks) {
  std::vector<FactorSpan> out;
  for (auto b : blocks) out.push_back(FactorSpan{b});
  return out;
}

inline SideCondition construction_conjugation(const Perm &a, const Perm &by, const Perm &result) {
  return {"construction: conjugation relation", CondStatus::Verified, "",
          Json{{"a", perm_json(a)}, {"by", perm_json(by)}, {"result", perm_json(result)}}};
}

inline SideCondition construction_primitive(const PermGroup &G) {
  return {"construction: group is primitive", CondStatus::Verified, "", Json{{"group", group_json(G)}}};
}

inline SideCondition construction_family(const PermGroup &G, GroupFamily fam, int degree) {
  return {"construction: recognized family", CondStatus::Verified, "",
          Json{{"group", group_json(G)},
               {"family", fam == GroupFamily::Alt ? "Alt" : "Sym"},
               {"degree", degree}}};
}

inline SideCondition construction_parity(const Perm &x) {
  return {"construction: element parity", CondStatus::Verified, "",
          Json{{"perm", perm_json(x)}, {"parity", x.is_even() ? "even" : "odd"}}};
}

inline SideCondition construction_member(const PermGroup &G, const Perm &x) {
  Json type = Json::array();
  for (int len : x.cycle_type()) type.push_back(len);
  return {"construction: member with cycle type", CondStatus::Verified, "",
          Json{{"group", group_json(G)}, {"perm", perm_json(x)}, {"type", type}}};
}

}  // namespace build

inline Certificate ax_p_group(const PermGroup &P, int p, std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::AX_PGROUP;
  cert.citation = citations::PGROUP;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, P, {build::entry(P)}, std::move(structure));
  cert.side_conditions.push_back({"inertia group equals the claim group", CondStatus::Verified, "", Json()});
  cert.side_conditions.push_back({"claim group is a p-group", CondStatus::Verified, "",
                                  Json{{"order", P.order().str()}}});
  return build::finish(std::move(cert));
}

inline Certificate ax_sylow(const PermGroup &G, const PermGroup &P, int p, std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::AX_SYLOW;
  cert.citation = citations::SYLOW;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, G, {build::entry(P)}, std::move(structure));
  cert.side_conditions.push_back({"claim group is a quasi-p group", CondStatus::Verified, "",
                                  Json{{"core_order", quasi_p_core(G, p).order().str()}}});
  cert.side_conditions.push_back({"inertia group is a Sylow p-subgroup", CondStatus::Verified, "",
                                  Json{{"group_p_part", p_power_part(G.order(), p).str()},
                                       {"inertia_order", P.order().str()}}});
  return build::finish(std::move(cert));
}

inline Certificate ax_ext_bp(const PermGroup &G, const PermGroup &I, int p, ClaimKind kind,
                             std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::AX_EXT_BP;
  cert.citation = citations::BP;
  cert.claim = build::make_claim(kind, p, G, {build::entry(I)}, std::move(structure));
  Json supp = Json::array();
  for (int x : G.support()) supp.push_back(x);
  cert.side_conditions.push_back({"claim group is the alternating group of prime degree p >= 5",
                                  CondStatus::Verified, "", Json{{"support", supp}, {"p", p}}});
  cert.side_conditions.push_back({"realizability granted by the external theorem", CondStatus::Assumed,
                                  citations::BP, Json()});
  return build::finish(std::move(cert));
}

inline Certificate ax_ext_a3(const PermGroup &G, std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::AX_EXT_A3;
  cert.citation = citations::A3;
  cert.claim = build::make_claim(ClaimKind::PwicPair, 3, G, {build::entry(G)}, std::move(structure));
  cert.side_conditions.push_back({"claim group is cyclic of order 3 on three points",
                                  CondStatus::Verified, "", Json{{"order", G.order().str()}}});
  return build::finish(std::move(cert));
}

inline Certificate ax_ext_dk56(const PermGroup &G, const Perm &sigma, int p, std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::AX_EXT_DK56;
  cert.citation = citations::DK56;
  PermGroup I(G.degree(), {sigma});
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, G, {build::entry(I)}, std::move(structure));
  cert.side_conditions.push_back({"claim group is the alternating group on r*p points",
                                  CondStatus::Verified, "",
                                  Json{{"r", static_cast<int>(G.support().size()) / p}, {"p", p}}});
  cert.side_conditions.push_back({"inertia is generated by u < r disjoint p-cycles", CondStatus::Verified,
                                  "", Json{{"sigma", perm_json(sigma)},
                                           {"u", static_cast<int>(sigma.cycle_type().size())}}});
  cert.side_conditions.push_back({"realizability granted by the external theorem", CondStatus::Assumed,
                                  citations::DK56, Json()});
  return build::finish(std::move(cert));
}

inline Certificate ax_ext_hkg(const PermGroup &I, int p) {
  Certificate cert;
  cert.rule = rule_ids::AX_EXT_HKG;
  cert.citation = citations::HKG;
  cert.claim = build::make_claim(ClaimKind::HkgPair, p, I, {build::entry(I)});
  auto dec = decompose_inertia(I, p);
  detail::require(dec.has_value(), "group does not have the inertia shape");
  cert.side_conditions.push_back({"group has the inertia shape P x| Z/m", CondStatus::Verified, "",
                                  Json{{"wild", group_json(dec->wild)},
                                       {"m", dec->m},
                                       {"c", perm_json(dec->complement)}}});
  return build::finish(std::move(cert));
}

inline Certificate ax_ext_dk52(Certificate factor1_cert, Certificate factor2_cert,
                               std::vector<std::pair<int, int>> blocks, int ambient_degree,
                               std::string structure = "") {
  detail::require(blocks.size() == 2, "two blocks expected");
  int p = factor1_cert.claim.p;
  auto spans = build::spans_of(blocks);
  PermGroup F1 = detail::claim_group(factor1_cert.claim);
  PermGroup F2 = detail::claim_group(factor2_cert.claim);
  std::vector<Perm> gens;
  for (const Perm &g : F1.generators()) gens.push_back(detail::embed_span(g, spans[0], ambient_degree));
  for (const Perm &g : F2.generators()) gens.push_back(detail::embed_span(g, spans[1], ambient_degree));
  PermGroup product(ambient_degree, gens);
  Perm lambda1 = detail::inertia_group(factor1_cert.claim).generators().at(0);
  Perm lambda2 = detail::inertia_group(factor2_cert.claim).generators().at(0);
  Perm lam = detail::assemble_pair(lambda1, lambda2, spans[0], spans[1], ambient_degree);

  Certificate cert;
  cert.rule = rule_ids::AX_EXT_DK52;
  cert.citation = citations::DK52;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, product,
                                 {build::entry(PermGroup(ambient_degree, {lam}))}, std::move(structure));
  cert.premises.push_back(std::move(factor1_cert));
  cert.premises.push_back(std::move(factor2_cert));
  cert.side_conditions.push_back({"claim group is a two-factor product of alternating groups",
                                  CondStatus::Verified, "", Json{{"blocks", blocks_json(spans)}}});
  cert.side_conditions.push_back(
      {"inertia generator splits into order-p components", CondStatus::Verified, "",
       Json{{"lambda1", perm_json(detail::embed_span(lambda1, spans[0], ambient_degree))},
            {"lambda2", perm_json(detail::embed_span(lambda2, spans[1], ambient_degree))}}});
  Json conjugators = Json::array();
  for (int a = 2; a <= p - 1; ++a) {
    Perm local = detail::matching_conjugator(lambda1.power(a), lambda1);
    conjugators.push_back(perm_json(detail::embed_span(local, spans[0], ambient_degree)));
  }
  cert.side_conditions.push_back({"an automorphism carries each power pair to the inertia generator",
                                  CondStatus::Verified, "", Json{{"conjugators", conjugators}}});
  bool perf = is_perfect(F1) && is_perfect(F2);
  cert.claim_checks.push_back({"both factors are perfect", "true", perf ? "true" : "false", perf});
  {
    BigInt closure = normal_closure(product, {lam}).order();
    bool holds = closure == product.order();
    cert.claim_checks.push_back({"conjugates of the inertia generate the product",
                                 "order " + product.order().str(), "order " + closure.str(), holds});
  }
  return build::finish(std::move(cert));
}

inline Certificate rule_enlarge(Certificate premise, const PermGroup &target_inertia,
                                const Perm &conjugator, std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::R_ENLARGE;
  cert.citation = citations::ENLARGE;
  PermGroup G = detail::claim_group(premise.claim);
  if (structure.empty()) structure = premise.claim.group.structure;
  cert.claim = build::make_claim(ClaimKind::PwicPair, premise.claim.p, G,
                                 {build::entry(target_inertia)}, std::move(structure));
  cert.side_conditions.push_back({"premise and claim concern the same group", CondStatus::Verified, "", Json()});
  cert.side_conditions.push_back({"conjugated premise inertia lies inside the claim inertia",
                                  CondStatus::Verified, "", Json{{"conjugator", perm_json(conjugator)}}});
  cert.premises.push_back(std::move(premise));
  return build::finish(std::move(cert));
}

inline Certificate rule_enlarge_ic(Certificate premise, const PermGroup &target_inertia,
                                   const Perm &beta, std::string structure = "") {
  Certificate cert;
  cert.rule = rule_ids::R_ENLARGE;
  cert.citation = citations::ENLARGE;
  PermGroup G = detail::claim_group(premise.claim);
  if (structure.empty()) structure = premise.claim.group.structure;
  cert.claim = build::make_claim(ClaimKind::IcPair, premise.claim.p, G, {build::entry(target_inertia)},
                                 std::move(structure));
  cert.side_conditions.push_back({"premise and claim concern the same group", CondStatus::Verified, "", Json()});
  cert.side_conditions.push_back({"wild parts nest under a shared tame generator", CondStatus::Verified, "",
                                  Json{{"beta", perm_json(beta)}}});
  cert.premises.push_back(std::move(premise));
  return build::finish(std::move(cert));
}

// h2 = 0 picks the least admissible conductor.
inline Certificate rule_patch_hkg(Certificate cert1, Certificate cert2, const PermGroup &G,
                                  int h1_prime = 1, int h2 = 0, std::string structure = "") {
  int p = cert1.claim.p;
  PermGroup I = detail::inertia_group(cert2.claim);
  Perm tau = detail::inertia_group(cert1.claim).generators().at(0);
  auto dec = decompose_inertia(I, p);
  detail::require(dec.has_value(), "inertia does not decompose");
  long long m = dec->m;
  long long center = 0;
  for (const Perm &z : I.elements(200000)) {
    bool commutes = true;
    for (const Perm &g : I.generators())
      if (z * g != g * z) {
        commutes = false;
        break;
      }
    if (commutes) ++center;
  }
  long long m_prime = center;
  while (m_prime % p == 0) m_prime /= p;
  if (h2 == 0) {
    for (h2 = 1;; ++h2) {
      if (gcd_ll(h2, p) != 1) continue;
      if ((static_cast<long long>(h2) * (p - 1)) % m != 0) continue;
      if (gcd_ll(h2, m) != m_prime) continue;
      break;
    }
  }
  PatchingParams params = derive_params(p, static_cast<int>(m), static_cast<int>(m_prime), h1_prime, h2);

  Certificate cert;
  cert.rule = rule_ids::R_PATCH_HKG;
  cert.citation = citations::PRIES;
  cert.claim = build::make_claim(ClaimKind::IcPair, p, G, {build::entry(I)}, std::move(structure));
  cert.side_conditions.push_back({"first premise inertia is cyclic of order p", CondStatus::Verified, "",
                                  Json{{"tau", perm_json(tau)}}});
  cert.side_conditions.push_back({"claim inertia is tau extended by a tame cyclic complement",
                                  CondStatus::Verified, "",
                                  Json{{"m", m}, {"c", perm_json(dec->complement)}}});
  cert.side_conditions.push_back({"the premise groups generate the claim group", CondStatus::Verified, "",
                                  Json{{"join_order", G.order().str()}}});
  cert.side_conditions.push_back(
      {"numerical patching hypothesis", CondStatus::Verified, "",
       Json{{"m_prime", m_prime},
            {"center_order", center},
            {"params", Json{{"h1_prime", params.h1_prime},
                            {"h2", params.h2},
                            {"gamma", params.gamma},
                            {"h1", params.h1},
                            {"e", params.e}}}}});
  cert.premises.push_back(std::move(cert1));
  cert.premises.push_back(std::move(cert2));
  return build::finish(std::move(cert));
}

inline Certificate rule_raynaud_patch(std::vector<Certificate> premises, std::string structure = "",
                                      std::vector<SideCondition> constructions = {}) {
  detail::require(!premises.empty(), "premises required");
  int degree = premises[0].claim.group.degree;
  int p = premises[0].claim.p;
  std::vector<Perm> joing, joini;
  for (const Certificate &prem : premises) {
    for (const Perm &g : prem.claim.group.generators) joing.push_back(g);
    for (const Perm &g : prem.claim.inertia.at(0).generators) joini.push_back(g);
  }
  PermGroup G(degree, joing);
  PermGroup I(degree, joini);
  Certificate cert;
  cert.rule = rule_ids::R_RAYNAUD;
  cert.citation = citations::RAYNAUD;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, G, {build::entry(I)}, std::move(structure));
  cert.side_conditions.push_back({"the premise groups generate the claim group", CondStatus::Verified, "",
                                  Json{{"join_order", G.order().str()}}});
  cert.side_conditions.push_back({"the premise inertia groups join to the claim inertia, a p-group",
                                  CondStatus::Verified, "", Json{{"join_inertia_order", I.order().str()}}});
  for (SideCondition &sc : constructions) cert.side_conditions.push_back(std::move(sc));
  cert.premises = std::move(premises);
  return build::finish(std::move(cert));
}

inline Certificate rule_kummer(Certificate premise, const Perm &c, const PermGroup &out_group,
                               std::string structure = "") {
  int p = premise.claim.p;
  int D = premise.claim.group.degree;
  PermGroup prod = detail::claim_group(premise.claim);
  // the premise (a DK-5.2 style product node) carries the factor layout
  std::vector<FactorSpan> spans;
  for (const SideCondition &sc : premise.side_conditions)
    if (sc.witness.is_object() && sc.witness.contains("blocks"))
      spans = blocks_from_json(sc.witness.at("blocks"));
  detail::require(spans.size() == 2, "premise does not carry a two-factor block layout");

  Perm lam = detail::inertia_group(premise.claim).generators().at(0);
  Perm lambda1 = detail::restrict_span(lam, spans[0]);
  Perm lambda2 = detail::restrict_span(lam, spans[1]);
  long long m = static_cast<long long>(c.order());
  int power = -1;
  Perm conj = conjugate(lam, c);
  Perm acc = lam;
  for (int k = 1; k <= static_cast<int>(lam.order()); ++k) {
    if (conj == acc) {
      power = k;
      break;
    }
    acc = acc * lam;
  }
  detail::require(power >= 1, "c does not normalize the inertia; conjugate is " + conj.cycle_string());

  std::vector<Perm> hgens = prod.generators();
  hgens.push_back(c);
  PermGroup H(D, hgens);
  int t = max_cyclic_common_quotient(H, static_cast<int>(m));
  auto cq = canonical_cyclic_quotient(H, t);
  PermGroup F = fiber_product(H, static_cast<int>(m), t, cq.phi);

  Certificate cert;
  cert.rule = rule_ids::R_KUMMER;
  cert.citation = citations::KUMMER;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, out_group,
                                 {build::entry(PermGroup(D, {lam}))}, std::move(structure));
  cert.side_conditions.push_back({"premise group is a direct product over the factor blocks",
                                  CondStatus::Verified, "", Json{{"blocks", blocks_json(spans)}}});
  cert.side_conditions.push_back(
      {"inertia components have order p", CondStatus::Verified, "",
       Json{{"lambda1", perm_json(detail::embed_span(lambda1, spans[0], D))},
            {"lambda2", perm_json(detail::embed_span(lambda2, spans[1], D))}}});
  cert.side_conditions.push_back({"c has prime-to-p order and normalizes the inertia", CondStatus::Verified,
                                  "", Json{{"c", perm_json(c)}, {"m", m}, {"power", power}}});
  cert.side_conditions.push_back({"H is generated by the product and c", CondStatus::Verified, "",
                                  Json{{"H", group_json(H)}}});
  cert.side_conditions.push_back({"maximal common cyclic quotient of H and <c>", CondStatus::Verified, "",
                                  Json{{"t", t}}});
  cert.side_conditions.push_back({"fiber product satisfies the order law", CondStatus::Verified, "",
                                  Json{{"F", group_json(F)},
                                       {"order_law", F.order().str() + " * " + std::to_string(t) + " = " +
                                                         H.order().str() + " * " + std::to_string(m)}}});
  cert.side_conditions.push_back({"kernel of the canonical quotient of H", CondStatus::Verified, "",
                                  Json{{"K", group_json(cq.kernel)}}});
  {
    BigInt full = factorial(static_cast<int>(H.support().size()));
    bool holds = H.order() == full;
    cert.claim_checks.push_back({"H is the full symmetric group on its support", "order " + full.str(),
                                 "order " + H.order().str(), holds});
  }
  {
    bool holds = same_group(cq.kernel, out_group);
    cert.claim_checks.push_back({"the canonical quotient kernel equals the output group",
                                 "order " + out_group.order().str(),
                                 "order " + BigInt(cq.kernel.order()).str(), holds});
  }
  if (detail::span_degree(spans[0]) == detail::span_degree(spans[1])) {
    Perm swapped = detail::assemble_pair(lambda2, lambda1, spans[0], spans[1], D);
    bool holds = conjugate(lam, c) == swapped;
    cert.claim_checks.push_back({"c exchanges the two inertia components", "true",
                                 holds ? "true" : "false", holds});
  }
  cert.premises.push_back(std::move(premise));
  return build::finish(std::move(cert));
}

inline Certificate rule_prod_perfect_1(Certificate f1, Certificate f2,
                                       std::vector<std::pair<int, int>> blocks, int ambient_degree,
                                       std::string structure = "") {
  int p = f1.claim.p;
  auto spans = build::spans_of(blocks);
  PermGroup F1 = detail::claim_group(f1.claim);
  PermGroup F2 = detail::claim_group(f2.claim);
  std::vector<Perm> gens;
  for (const Perm &g : F1.generators()) gens.push_back(detail::embed_span(g, spans[0], ambient_degree));
  for (const Perm &g : F2.generators()) gens.push_back(detail::embed_span(g, spans[1], ambient_degree));
  PermGroup product(ambient_degree, gens);
  Perm lambda1 = detail::inertia_group(f1.claim).generators().at(0);
  Perm lambda2 = detail::inertia_group(f2.claim).generators().at(0);
  Perm lam = detail::assemble_pair(lambda1, lambda2, spans[0], spans[1], ambient_degree);

  Certificate cert;
  cert.rule = rule_ids::R_PROD_1;
  cert.citation = citations::DK52;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, product,
                                 {build::entry(PermGroup(ambient_degree, {lam}))}, std::move(structure));
  cert.side_conditions.push_back({"claim group is a two-factor direct product", CondStatus::Verified, "",
                                  Json{{"blocks", blocks_json(spans)}}});
  cert.side_conditions.push_back({"both factors are perfect", CondStatus::Verified, "", Json()});
  Recognition r1 = recognize_alt_or_sym(F1);
  bool constructible = (r1.family != GroupFamily::Other) && r1.degree == F1.degree();
  if (constructible) {
    Json conjugators = Json::array();
    for (int a = 2; a <= p - 1; ++a) {
      Perm local = detail::matching_conjugator(lambda1.power(a), lambda1);
      conjugators.push_back(perm_json(detail::embed_span(local, spans[0], ambient_degree)));
    }
    cert.side_conditions.push_back({"an automorphism carries each power pair to the inertia generator",
                                    CondStatus::Verified, "", Json{{"conjugators", conjugators}}});
  } else {
    cert.side_conditions.push_back({"an automorphism carries each power pair to the inertia generator",
                                    CondStatus::Assumed, citations::DK52, Json()});
  }
  cert.premises.push_back(std::move(f1));
  cert.premises.push_back(std::move(f2));
  return build::finish(std::move(cert));
}

inline Certificate rule_prod_no_common_quotient(Certificate f1, Certificate f2,
                                                std::vector<std::pair<int, int>> blocks,
                                                int ambient_degree, const PermGroup &Q,
                                                std::string structure = "") {
  int p = f1.claim.p;
  auto spans = build::spans_of(blocks);
  PermGroup F1 = detail::claim_group(f1.claim);
  PermGroup F2 = detail::claim_group(f2.claim);
  std::vector<Perm> gens;
  for (const Perm &g : F1.generators()) gens.push_back(detail::embed_span(g, spans[0], ambient_degree));
  for (const Perm &g : F2.generators()) gens.push_back(detail::embed_span(g, spans[1], ambient_degree));
  PermGroup product(ambient_degree, gens);

  Certificate cert;
  cert.rule = rule_ids::R_PROD_2;
  cert.citation = citations::DAS75;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, product, {build::entry(Q)}, std::move(structure));
  cert.side_conditions.push_back({"claim group is a two-factor direct product", CondStatus::Verified, "",
                                  Json{{"blocks", blocks_json(spans)}}});
  cert.side_conditions.push_back({"the factors admit no common nontrivial quotient", CondStatus::Verified,
                                  "", Json()});
  cert.side_conditions.push_back({"the inertia projections match the premise inertia groups",
                                  CondStatus::Verified, "", Json()});
  cert.premises.push_back(std::move(f1));
  cert.premises.push_back(std::move(f2));
  return build::finish(std::move(cert));
}

inline Certificate rule_prod_perfect_3(Certificate f1, Certificate f2,
                                       std::vector<std::pair<int, int>> blocks, int ambient_degree,
                                       const PermGroup &P, std::string structure = "") {
  int p = f1.claim.p;
  auto spans = build::spans_of(blocks);
  PermGroup F1 = detail::claim_group(f1.claim);
  PermGroup F2 = detail::claim_group(f2.claim);
  std::vector<Perm> gens;
  for (const Perm &g : F1.generators()) gens.push_back(detail::embed_span(g, spans[0], ambient_degree));
  for (const Perm &g : F2.generators()) gens.push_back(detail::embed_span(g, spans[1], ambient_degree));
  PermGroup product(ambient_degree, gens);
  std::vector<Perm> local;
  for (const Perm &g : P.generators())
    local.push_back(detail::restrict_two_spans(g, spans[0], spans[1]));
  auto [prod_local, ps] = direct_product({F1, F2});
  GoursatData gd = goursat(ps, PermGroup(ps.total_degree, local));

  Certificate cert;
  cert.rule = rule_ids::R_PROD_3;
  cert.citation = citations::COMPOSITUM;
  cert.claim = build::make_claim(ClaimKind::PwicPair, p, product, {build::entry(P)}, std::move(structure));
  cert.side_conditions.push_back({"claim group is a two-factor direct product", CondStatus::Verified, "",
                                  Json{{"blocks", blocks_json(spans)}}});
  cert.side_conditions.push_back({"both factors are perfect", CondStatus::Verified, "", Json()});
  cert.side_conditions.push_back({"goursat decomposition of the inertia", CondStatus::Verified, "",
                                  Json{{"quotient_order", gd.quotient_order.str()},
                                       {"proj1_order", gd.proj1.order().str()},
                                       {"proj2_order", gd.proj2.order().str()}}});
  cert.side_conditions.push_back({"compositum patching applies", CondStatus::Assumed,
                                  citations::COMPOSITUM, Json()});
  cert.premises.push_back(std::move(f1));
  cert.premises.push_back(std::move(f2));
  return build::finish(std::move(cert));
}

inline Certificate rule_gpwic_compose(std::vector<Certificate> premises, const PermGroup &G,
                                      const std::vector<std::string> &labels,
                                      std::string structure = "") {
  detail::require(premises.size() == labels.size(), "one label per premise required");
  std::vector<InertiaEntry> inertia;
  for (size_t j = 0; j < premises.size(); ++j) {
    InertiaEntry e;
    e.generators = premises[j].claim.inertia.at(0).generators;
    e.label = labels[j];
    inertia.push_back(std::move(e));
  }
  Certificate cert;
  cert.rule = rule_ids::R_GPWIC;
  cert.citation = citations::DAS47;
  cert.claim = build::make_claim(ClaimKind::GpwicMulti, premises[0].claim.p, G, std::move(inertia),
                                 std::move(structure));
  cert.side_conditions.push_back({"the premise groups generate the claim group", CondStatus::Verified, "",
                                  Json{{"join_order", G.order().str()}}});
  cert.side_conditions.push_back({"inductive multi-point patching applies", CondStatus::Assumed,
                                  citations::DAS47, Json()});
  cert.premises = std::move(premises);
  return build::finish(std::move(cert));
}

// ---------------------------------------------------------------------------

inline void check_certificate_node(const Certificate &cert) {
  using namespace rule_ids;
  static const std::map<std::string, std::function<void(const Certificate &)>> table = {
      {AX_PGROUP, checkers::ax_p_group},   {AX_SYLOW, checkers::ax_sylow},
      {AX_EXT_BP, checkers::ax_ext_bp},    {AX_EXT_DK52, checkers::ax_ext_dk52},
      {AX_EXT_DK56, checkers::ax_ext_dk56},{AX_EXT_A3, checkers::ax_ext_a3},
      {AX_EXT_HKG, checkers::ax_ext_hkg},  {R_ENLARGE, checkers::r_enlarge},
      {R_PATCH_HKG, checkers::r_patch_hkg},{R_KUMMER, checkers::r_kummer},
      {R_RAYNAUD, checkers::r_raynaud},    {R_PROD_1, checkers::r_prod_1},
      {R_PROD_2, checkers::r_prod_2},      {R_PROD_3, checkers::r_prod_3},
      {R_GPWIC, checkers::r_gpwic}};
  auto it = table.find(cert.rule);
  if (it == table.end()) throw RuleError("unknown rule id: " + cert.rule);
  it->second(cert);
}

struct VerifyReport {
  bool accepted = true;
  int nodes = 0;
  std::vector<std::string> failures;  // "path: message"
  std::vector<std::string> assumed;   // "path: statement [citation]"
};

namespace detail {

inline void verify_walk(const Certificate &cert, const std::string &path, VerifyReport &report) {
  ++report.nodes;
  for (const SideCondition &sc : cert.side_conditions) {
    if (sc.status == CondStatus::Failed) {
      report.accepted = false;
      report.failures.push_back(path + ": failed side condition: " + sc.statement);
    }
    if (sc.status == CondStatus::Assumed)
      report.assumed.push_back(path + ": " + sc.statement + " [" + sc.citation + "]");
  }
  try {
    check_certificate_node(cert);
  } catch (const std::exception &e) {
    report.accepted = false;
    report.failures.push_back(path + ": " + e.what());
  }
  for (size_t i = 0; i < cert.premises.size(); ++i)
    verify_walk(cert.premises[i], path + ".premises[" + std::to_string(i) + "]", report);
}

}  // namespace detail

// Re-checks every node from scratch: fresh groups, fresh chains, all side
// conditions and claim-checks recomputed and compared against the recorded
// data. Accepts iff nothing fails anywhere in the tree.
inline VerifyReport verify_certificate(const Certificate &cert) {
  VerifyReport report;
  detail::verify_walk(cert, "root", report);
  return report;
}

}  // namespace wildcert
