#pragma once

// Certificate data model: realizability claims, side conditions with
// witnesses, intermediate claim-checks, and the certificate tree. Nodes
// serialize to JSON (sorted keys, canonical cycle notation) and round-trip
// losslessly.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "group_analysis.hpp"
#include "perm.hpp"
#include "perm_group.hpp"

namespace wildcert {

using Json = nlohmann::json;

class CertificateError : public std::runtime_error {
 public:
  explicit CertificateError(const std::string &msg) : std::runtime_error(msg) {}
};

enum class ClaimKind { PwicPair, IcPair, GpwicMulti, HkgPair };

inline std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::PwicPair: return "PWIC-pair";
    case ClaimKind::IcPair: return "IC-pair";
    case ClaimKind::GpwicMulti: return "GPWIC-multi";
    case ClaimKind::HkgPair: return "HKG-pair";
  }
  return "?";
}

inline ClaimKind claim_kind_from_string(const std::string &s) {
  if (s == "PWIC-pair") return ClaimKind::PwicPair;
  if (s == "IC-pair") return ClaimKind::IcPair;
  if (s == "GPWIC-multi") return ClaimKind::GpwicMulti;
  if (s == "HKG-pair") return ClaimKind::HkgPair;
  throw CertificateError("unknown claim kind: " + s);
}

struct GroupData {
  int degree = 1;
  std::vector<Perm> generators;
  std::string order;      // decimal
  std::string structure;  // canonical group-spec text when known

  PermGroup to_group() const { return PermGroup(degree, generators); }
};

inline GroupData make_group_data(const PermGroup &g, std::string structure = "") {
  GroupData d;
  d.degree = g.degree();
  d.generators = g.generators();
  d.order = g.order().str();
  d.structure = std::move(structure);
  return d;
}

struct InertiaEntry {
  std::vector<Perm> generators;
  std::string label;  // point label for GPWIC claims; empty otherwise
};

struct Claim {
  ClaimKind kind = ClaimKind::PwicPair;
  int p = 2;
  GroupData group;
  std::vector<InertiaEntry> inertia;
};

enum class CondStatus { Verified, Assumed, Failed };

inline std::string to_string(CondStatus s) {
  switch (s) {
    case CondStatus::Verified: return "verified";
    case CondStatus::Assumed: return "assumed";
    case CondStatus::Failed: return "failed";
  }
  return "?";
}

inline CondStatus cond_status_from_string(const std::string &s) {
  if (s == "verified") return CondStatus::Verified;
  if (s == "assumed") return CondStatus::Assumed;
  if (s == "failed") return CondStatus::Failed;
  throw CertificateError("unknown condition status: " + s);
}

struct SideCondition {
  std::string statement;
  CondStatus status = CondStatus::Verified;
  std::string citation;  // supporting source for Assumed conditions
  Json witness;          // typed payload; see perm_json/group_json below
};

// An intermediate assertion from a proof narrative, recorded with its actual
// computed outcome. A false claim-check does not invalidate a certificate
// whose rule hypotheses hold, but verification recomputes and pins it.
struct ClaimCheck {
  std::string statement;
  std::string expected;
  std::string computed;
  bool holds = true;
};

struct Certificate {
  Claim claim;
  std::string rule;
  std::string citation;
  std::vector<SideCondition> side_conditions;
  std::vector<ClaimCheck> claim_checks;
  std::vector<Certificate> premises;
};

// ---------------------------------------------------------------------------
// typed witness payload helpers

inline Json perm_json(const Perm &p) {
  return Json{{"kind", "perm"}, {"degree", p.degree()}, {"v", p.cycle_string()}};
}

inline Json group_json(const PermGroup &g) {
  Json gens = Json::array();
  for (const Perm &x : g.generators()) gens.push_back(x.cycle_string());
  return Json{{"kind", "group"}, {"degree", g.degree()}, {"generators", gens},
              {"order", g.order().str()}};
}

// A factor span is an ordered list of disjoint point intervals (start, len);
// concatenating them in order gives the factor's local coordinates. Freshly
// built products use one interval per factor; reindexing may split them.
using FactorSpan = std::vector<std::pair<int, int>>;

inline Json blocks_json(const std::vector<FactorSpan> &factors) {
  Json arr = Json::array();
  for (const FactorSpan &span : factors) {
    Json intervals = Json::array();
    for (auto [start, len] : span) intervals.push_back(Json::array({start, len}));
    arr.push_back(intervals);
  }
  return Json{{"kind", "blocks"}, {"v", arr}};
}

inline Perm perm_from_json(const Json &j) {
  if (!j.is_object() || j.value("kind", "") != "perm")
    throw CertificateError("expected a perm witness");
  return parse_cycles(j.at("v").get<std::string>(), j.at("degree").get<int>());
}

inline PermGroup group_from_json(const Json &j) {
  if (!j.is_object() || j.value("kind", "") != "group")
    throw CertificateError("expected a group witness");
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto &s : j.at("generators")) gens.push_back(parse_cycles(s.get<std::string>(), degree));
  PermGroup g(degree, gens);
  if (j.contains("order") && g.order().str() != j.at("order").get<std::string>())
    throw CertificateError("group witness order mismatch: recorded " +
                           j.at("order").get<std::string>() + ", recomputed " + g.order().str());
  return g;
}

inline std::vector<FactorSpan> blocks_from_json(const Json &j) {
  if (!j.is_object() || j.value("kind", "") != "blocks")
    throw CertificateError("expected a blocks witness");
  std::vector<FactorSpan> out;
  for (const auto &spans : j.at("v")) {
    FactorSpan span;
    for (const auto &b : spans) span.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
    out.push_back(std::move(span));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON serialization

inline Json to_json(const Claim &c) {
  Json gens = Json::array();
  for (const Perm &g : c.group.generators) gens.push_back(g.cycle_string());
  Json inertia = Json::array();
  for (const InertiaEntry &e : c.inertia) {
    Json egens = Json::array();
    for (const Perm &g : e.generators) egens.push_back(g.cycle_string());
    inertia.push_back(Json{{"generators", egens}, {"label", e.label}});
  }
  return Json{{"kind", to_string(c.kind)},
              {"p", c.p},
              {"group", Json{{"degree", c.group.degree},
                             {"generators", gens},
                             {"order", c.group.order},
                             {"structure", c.group.structure}}},
              {"inertia", inertia}};
}

inline Claim claim_from_json(const Json &j) {
  Claim c;
  c.kind = claim_kind_from_string(j.at("kind").get<std::string>());
  c.p = j.at("p").get<int>();
  const Json &g = j.at("group");
  c.group.degree = g.at("degree").get<int>();
  for (const auto &s : g.at("generators"))
    c.group.generators.push_back(parse_cycles(s.get<std::string>(), c.group.degree));
  c.group.order = g.at("order").get<std::string>();
  c.group.structure = g.value("structure", "");
  for (const auto &e : j.at("inertia")) {
    InertiaEntry entry;
    for (const auto &s : e.at("generators"))
      entry.generators.push_back(parse_cycles(s.get<std::string>(), c.group.degree));
    entry.label = e.value("label", "");
    c.inertia.push_back(std::move(entry));
  }
  return c;
}

inline Json to_json(const Certificate &cert) {
  Json conds = Json::array();
  for (const SideCondition &sc : cert.side_conditions)
    conds.push_back(Json{{"statement", sc.statement},
                         {"status", to_string(sc.status)},
                         {"citation", sc.citation},
                         {"witness", sc.witness}});
  Json checks = Json::array();
  for (const ClaimCheck &cc : cert.claim_checks)
    checks.push_back(Json{{"statement", cc.statement},
                          {"expected", cc.expected},
                          {"computed", cc.computed},
                          {"holds", cc.holds}});
  Json premises = Json::array();
  for (const Certificate &p : cert.premises) premises.push_back(to_json(p));
  return Json{{"rule", cert.rule},        {"citation", cert.citation},
              {"claim", to_json(cert.claim)}, {"side_conditions", conds},
              {"claim_checks", checks},   {"premises", premises}};
}

inline Certificate certificate_from_json(const Json &j) {
  Certificate cert;
  cert.rule = j.at("rule").get<std::string>();
  cert.citation = j.value("citation", "");
  cert.claim = claim_from_json(j.at("claim"));
  for (const auto &sc : j.at("side_conditions")) {
    SideCondition cond;
    cond.statement = sc.at("statement").get<std::string>();
    cond.status = cond_status_from_string(sc.at("status").get<std::string>());
    cond.citation = sc.value("citation", "");
    cond.witness = sc.value("witness", Json());
    cert.side_conditions.push_back(std::move(cond));
  }
  for (const auto &cc : j.at("claim_checks")) {
    ClaimCheck check;
    check.statement = cc.at("statement").get<std::string>();
    check.expected = cc.at("expected").get<std::string>();
    check.computed = cc.at("computed").get<std::string>();
    check.holds = cc.at("holds").get<bool>();
    cert.claim_checks.push_back(std::move(check));
  }
  for (const auto &p : j.at("premises")) cert.premises.push_back(certificate_from_json(p));
  return cert;
}

constexpr int kCertificateSchemaVersion = 1;

inline Json certificate_document(const Certificate &cert) {
  return Json{{"schema_version", kCertificateSchemaVersion}, {"certificate", to_json(cert)}};
}

inline Certificate certificate_from_document(const Json &doc) {
  if (!doc.contains("schema_version")) throw CertificateError("missing schema_version");
  if (doc.at("schema_version").get<int>() != kCertificateSchemaVersion)
    throw CertificateError("unsupported schema_version");
  return certificate_from_json(doc.at("certificate"));
}

// ---------------------------------------------------------------------------
// group comparison helpers

inline bool subgroup_of(const PermGroup &a, const PermGroup &b) {
  if (a.degree() != b.degree()) return false;
  for (const Perm &g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

inline bool same_group(const PermGroup &a, const PermGroup &b) {
  return a.degree() == b.degree() && a.order() == b.order() && subgroup_of(a, b);
}

// ---------------------------------------------------------------------------
// support reindexing: transplants a certificate built on local points into a
// larger ambient domain. point_map[i-1] is the ambient point for local i;
// unmapped ambient points are fixed. Pure relabeling, so every permutation
// identity in the tree is preserved.

// Points beyond the map (auxiliary blocks such as a fiber product's cyclic
// component) are appended after the ambient degree in order.
inline Perm reindex_perm(const Perm &p, const std::vector<int> &point_map, int ambient_degree) {
  std::vector<int> map = point_map;
  int extra = p.degree() - static_cast<int>(point_map.size());
  for (int k = 1; k <= extra; ++k) map.push_back(ambient_degree + k);
  int target = ambient_degree + std::max(0, extra);
  std::vector<int> im(target);
  std::iota(im.begin(), im.end(), 1);
  for (int x = 1; x <= p.degree(); ++x) im[map[x - 1] - 1] = map[p(x) - 1];
  return Perm::from_images(im);
}

inline Json reindex_witness(const Json &w, const std::vector<int> &point_map, int ambient_degree) {
  if (w.is_object() && w.value("kind", "") == "perm") {
    Perm p = perm_from_json(w);
    return perm_json(reindex_perm(p, point_map, ambient_degree));
  }
  if (w.is_object() && w.value("kind", "") == "group") {
    PermGroup g = group_from_json(w);
    int target = ambient_degree + std::max(0, g.degree() - static_cast<int>(point_map.size()));
    std::vector<Perm> gens;
    for (const Perm &x : g.generators()) gens.push_back(reindex_perm(x, point_map, ambient_degree));
    return group_json(PermGroup(target, gens));
  }
  if (w.is_object() && w.value("kind", "") == "blocks") {
    auto factors = blocks_from_json(w);
    std::vector<FactorSpan> mapped;
    for (const FactorSpan &span : factors) {
      FactorSpan out;
      for (auto [start, len] : span) {
        // split the interval into maximal runs that the map keeps contiguous
        int run_start = start;
        for (int i = 1; i <= len; ++i) {
          bool cont = i < len && point_map[start + i - 1] == point_map[start + i - 2] + 1;
          if (!cont) {
            out.emplace_back(point_map[run_start - 1], start + i - run_start);
            run_start = start + i;
          }
        }
      }
      mapped.push_back(std::move(out));
    }
    return blocks_json(mapped);
  }
  if (w.is_object()) {
    Json out = Json::object();
    for (auto it = w.begin(); it != w.end(); ++it)
      out[it.key()] = reindex_witness(it.value(), point_map, ambient_degree);
    return out;
  }
  if (w.is_array()) {
    Json out = Json::array();
    for (const auto &x : w) out.push_back(reindex_witness(x, point_map, ambient_degree));
    return out;
  }
  return w;
}

// Rules whose premises live in factor-local coordinates; transplanting the
// node leaves those subtrees untouched (their local indexing is preserved
// because factor spans are rebuilt in span order).
inline bool has_factor_local_premises(const std::string &rule) {
  return rule == "R-PROD-1" || rule == "R-PROD-2" || rule == "R-PROD-3" || rule == "AX-EXT-DK-5.2";
}

inline Certificate reindex_certificate(const Certificate &cert, const std::vector<int> &point_map,
                                       int ambient_degree) {
  Certificate out = cert;
  std::vector<Perm> gens;
  for (const Perm &g : cert.claim.group.generators)
    gens.push_back(reindex_perm(g, point_map, ambient_degree));
  out.claim.group = make_group_data(PermGroup(ambient_degree, gens), cert.claim.group.structure);
  out.claim.inertia.clear();
  for (const InertiaEntry &e : cert.claim.inertia) {
    InertiaEntry ne;
    ne.label = e.label;
    for (const Perm &g : e.generators) ne.generators.push_back(reindex_perm(g, point_map, ambient_degree));
    out.claim.inertia.push_back(std::move(ne));
  }
  for (SideCondition &sc : out.side_conditions)
    sc.witness = reindex_witness(sc.witness, point_map, ambient_degree);
  if (!has_factor_local_premises(cert.rule)) {
    out.premises.clear();
    for (const Certificate &p : cert.premises)
      out.premises.push_back(reindex_certificate(p, point_map, ambient_degree));
  }
  return out;
}

inline std::vector<int> offset_map(int local_degree, int offset) {
  std::vector<int> m(local_degree);
  std::iota(m.begin(), m.end(), offset + 1);
  return m;
}

}  // namespace wildcert
