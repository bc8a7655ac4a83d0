#include <catch2/catch_amalgamated.hpp>

#include "wildcert/corpus.hpp"
#include "wildcert/strategies.hpp"

using namespace wildcert;

namespace {

// Collects all claim checks in the tree.
void collect_checks(const Certificate &cert, std::vector<ClaimCheck> &out) {
  out.insert(out.end(), cert.claim_checks.begin(), cert.claim_checks.end());
  for (const Certificate &p : cert.premises) collect_checks(p, out);
}

bool has_rule(const Certificate &cert, const std::string &rule) {
  if (cert.rule == rule) return true;
  for (const Certificate &p : cert.premises)
    if (has_rule(p, rule)) return true;
  return false;
}

}  // namespace

TEST_CASE("order-2 construction matches the proposition") {
  for (int d = 5; d <= 8; ++d) {
    for (int r = 1; 2 * r < d; ++r) {
      Certificate cert = strat::strategy_order2(d, r);
      PermGroup H = detail::claim_group(cert.claim);
      Recognition rec = recognize_alt_or_sym(H);
      if (r % 2 == 0) {
        REQUIRE(rec.family == GroupFamily::Alt);
        REQUIRE(H.order() == factorial(d) / 2);
      } else {
        REQUIRE(rec.family == GroupFamily::Sym);
        REQUIRE(H.order() == factorial(d));
      }
      REQUIRE(verify_certificate(cert).accepted);
    }
  }
  SECTION("boundary: r at the floor for odd degree is allowed") {
    Certificate cert = strat::strategy_order2(7, 3);
    REQUIRE(detail::claim_group(cert.claim).order() == factorial(7));
  }
  SECTION("fixed-point-free ranges are declined") {
    REQUIRE_THROWS_AS(strat::strategy_order2(6, 3), StrategyDecline);
    REQUIRE_THROWS_AS(strat::strategy_order2(4, 2), StrategyDecline);
  }
}

TEST_CASE("pwic dispatcher: refusals") {
  SECTION("not a p-group") {
    auto out = prove_pwic(symmetric_group(4), symmetric_group(3), 2);
    REQUIRE(out.status == ProveOutcome::Status::Refused);
    REQUIRE(out.refusal == RefusalKind::NotPGroup);  // the p-group check fires first
    PermGroup s3_in_4(4, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3)", 4)});
    auto out2 = prove_pwic(symmetric_group(4), s3_in_4, 2);
    REQUIRE(out2.status == ProveOutcome::Status::Refused);
    REQUIRE(out2.refusal == RefusalKind::NotPGroup);
  }
  SECTION("A4 is not quasi-2") {
    PermGroup p(4, {parse_cycles("(1 2)(3 4)", 4)});
    auto out = prove_pwic(alternating_group(4), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Refused);
    REQUIRE(out.refusal == RefusalKind::NotQuasiP);
  }
  SECTION("normal Klein four in S4 has proper closure") {
    PermGroup v4(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
    auto out = prove_pwic(symmetric_group(4), v4, 2);
    REQUIRE(out.status == ProveOutcome::Status::Refused);
    REQUIRE(out.refusal == RefusalKind::ClosureNotFull);
  }
}

TEST_CASE("pwic dispatcher: axioms") {
  SECTION("p-group pair") {
    PermGroup v4(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
    auto out = prove_pwic(v4, v4, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(out.cert->rule == rule_ids::AX_PGROUP);
  }
  SECTION("sylow pair in S4") {
    PermGroup d8(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
    auto out = prove_pwic(symmetric_group(4), d8, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(out.cert->rule == rule_ids::AX_SYLOW);
  }
  SECTION("BP for A5 at p=5") {
    PermGroup z5(5, {parse_cycles("(1 2 3 4 5)", 5)});
    auto out = prove_pwic(alternating_group(5), z5, 5);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(out.cert->rule == rule_ids::AX_EXT_BP);
  }
  SECTION("A3 at p=3") {
    PermGroup a3 = alternating_group(3);
    auto out = prove_pwic(a3, a3, 3);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    // (A3, A3) is a p-group pair before the A3 axiom is consulted
    REQUIRE((out.cert->rule == rule_ids::AX_PGROUP || out.cert->rule == rule_ids::AX_EXT_A3));
  }
}

TEST_CASE("alt-odd strategy") {
  SECTION("A6 at p=3: the induction base with its flagged claim checks") {
    PermGroup p(6, {parse_cycles("(1 2 3)(4 5 6)", 6)});
    auto out = prove_pwic(alternating_group(6), p, 3);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
    REQUIRE(has_rule(*out.cert, rule_ids::R_KUMMER));
    std::vector<ClaimCheck> checks;
    collect_checks(*out.cert, checks);
    bool found_h_check = false;
    for (const ClaimCheck &c : checks)
      if (c.statement == "H is the full symmetric group on its support") {
        found_h_check = true;
        REQUIRE_FALSE(c.holds);
        REQUIRE(c.computed == "order 18");
        REQUIRE(c.expected == "order 720");
      }
    REQUIRE(found_h_check);
  }
  SECTION("A9 at p=3 with a single 3-cycle goes through DK 5.6") {
    PermGroup p(9, {parse_cycles("(1 2 3)", 9)});
    auto out = prove_pwic(alternating_group(9), p, 3);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(has_rule(*out.cert, rule_ids::AX_EXT_DK56));
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("A10 at p=5 full product of 5-cycles") {
    PermGroup p(10, {parse_cycles("(1 2 3 4 5)(6 7 8 9 10)", 10)});
    auto out = prove_pwic(alternating_group(10), p, 5);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(has_rule(*out.cert, rule_ids::R_KUMMER));
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("conjugated witness in non-standard position") {
    PermGroup p(6, {parse_cycles("(1 4 2)(3 5 6)", 6)});
    auto out = prove_pwic(alternating_group(6), p, 3);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
}

TEST_CASE("characteristic-2 strategies") {
  SECTION("S5 with a transposition") {
    PermGroup p(5, {parse_cycles("(1 2)", 5)});
    auto out = prove_pwic(symmetric_group(5), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("A5 with a double transposition") {
    PermGroup p(5, {parse_cycles("(1 2)(3 4)", 5)});
    auto out = prove_pwic(alternating_group(5), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("S7 with a 4-cycle runs the square route") {
    PermGroup p(7, {parse_cycles("(1 2 3 4)", 7)});
    auto out = prove_pwic(symmetric_group(7), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(has_rule(*out.cert, rule_ids::R_RAYNAUD));
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("S7 with a triple transposition uses the odd-degree boundary") {
    PermGroup p(7, {parse_cycles("(1 2)(3 4)(5 6)", 7)});
    auto out = prove_pwic(symmetric_group(7), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("A7 sylow 2-subgroup") {
    PermGroup syl = sylow_p(alternating_group(7), 2);
    auto out = prove_pwic(alternating_group(7), syl, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("S4 transposition works, 4-cycle is open") {
    PermGroup t(4, {parse_cycles("(1 2)", 4)});
    auto out = prove_pwic(symmetric_group(4), t, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    PermGroup c4(4, {parse_cycles("(1 2 3 4)", 4)});
    auto open = prove_pwic(symmetric_group(4), c4, 2);
    REQUIRE(open.status == ProveOutcome::Status::Open);
  }
  SECTION("A8 fixed-point-free involution is open") {
    PermGroup p(8, {parse_cycles("(1 2)(3 4)(5 6)(7 8)", 8)});
    auto out = prove_pwic(alternating_group(8), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Open);
  }
  SECTION("A8 with a usable witness succeeds despite 4 | d") {
    PermGroup p(8, {parse_cycles("(1 2)(3 4)", 8)});
    auto out = prove_pwic(alternating_group(8), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("S6 fixed-point-free odd involution is open") {
    PermGroup p(6, {parse_cycles("(1 2)(3 4)(5 6)", 6)});
    auto out = prove_pwic(symmetric_group(6), p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Open);
  }
}

TEST_CASE("product strategies") {
  SECTION("diagonal 2-group in A5 x A7") {
    auto spec = parse_group_spec("A5xA7");
    PermGroup p(12, {parse_cycles("(1 2)(3 4)(6 7)(8 9)", 12)});
    auto out = prove_pwic(spec.group, p, 2);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(has_rule(*out.cert, rule_ids::R_PROD_3));
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("diagonal 3-group in A6 x A6") {
    auto spec = parse_group_spec("A6xA6");
    PermGroup p(12, {parse_cycles("(1 2 3)(4 5 6)(7 8 9)(10 11 12)", 12)});
    auto out = prove_pwic(spec.group, p, 3);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
}

TEST_CASE("ic dispatcher") {
  SECTION("A5 full inertia via BP") {
    PermGroup i(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 5)(3 4)", 5)});
    auto out = prove_ic(alternating_group(5), i, 5);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(out.cert->rule == rule_ids::AX_EXT_BP);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("A6 corollary route with the normalizer equality") {
    PermGroup i(6, {parse_cycles("(1 2 3 4 5)", 6), parse_cycles("(2 5)(3 4)", 6)});
    auto out = prove_ic(alternating_group(6), i, 5);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(out.cert->rule == rule_ids::R_PATCH_HKG);
    bool has_equality = false;
    for (const SideCondition &sc : out.cert->side_conditions)
      if (sc.statement == "construction: groups are equal") has_equality = true;
    REQUIRE(has_equality);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("A8 reduction without the equality note") {
    PermGroup i(8, {parse_cycles("(1 2 3 4 5)", 8), parse_cycles("(2 5)(3 4)", 8)});
    auto out = prove_ic(alternating_group(8), i, 5);
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("non-decomposable inertia is refused") {
    auto out = prove_ic(alternating_group(4), alternating_group(4), 3);
    REQUIRE(out.status == ProveOutcome::Status::Refused);
    REQUIRE(out.refusal == RefusalKind::NotPotentialInertia);
  }
}

TEST_CASE("gpwic dispatcher") {
  SECTION("two points on S5 x S7") {
    auto spec = parse_group_spec("S5xS7");
    PermGroup p1(12, {parse_cycles("(1 2)", 12)});
    PermGroup p2(12, {parse_cycles("(6 7)(8 9)(10 11)", 12)});
    auto out = prove_gpwic(spec.group, {p1, p2}, {"x1", "x2"}, 2, spec.factor_degrees());
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(out.cert->rule == rule_ids::R_GPWIC);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("order >= 4 component on the second factor") {
    auto spec = parse_group_spec("S5xS7");
    PermGroup p1(12, {parse_cycles("(1 2)", 12)});
    PermGroup p2(12, {parse_cycles("(6 7 8 9)", 12)});
    auto out = prove_gpwic(spec.group, {p1, p2}, {"x1", "x2"}, 2, spec.factor_degrees());
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("dropped row with trivial sign projection") {
    auto spec = parse_group_spec("S5xS7");
    PermGroup p1(12, {parse_cycles("(1 2)", 12), parse_cycles("(6 7)", 12)});
    PermGroup p2(12, {parse_cycles("(6 7)(8 9)", 12)});  // even component: trivial projection
    auto out = prove_gpwic(spec.group, {p1, p2}, {"x1", "x2"}, 2, spec.factor_degrees());
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
  SECTION("deficient inertia lists are refused") {
    auto spec = parse_group_spec("S5xS7");
    PermGroup p1(12, {parse_cycles("(1 2)", 12)});
    auto out = prove_gpwic(spec.group, {p1}, {"x1"}, 2, spec.factor_degrees());
    REQUIRE(out.status == ProveOutcome::Status::Refused);
    REQUIRE(out.refusal == RefusalKind::ClosureNotFull);
  }
  SECTION("alternating products at odd p compose through closures") {
    auto spec = parse_group_spec("A6xA6");
    PermGroup p1(12, {parse_cycles("(1 2 3)(4 5 6)", 12)});
    PermGroup p2(12, {parse_cycles("(7 8 9)(10 11 12)", 12)});
    auto out = prove_gpwic(spec.group, {p1, p2}, {"x1", "x2"}, 3, spec.factor_degrees());
    REQUIRE(out.status == ProveOutcome::Status::Proved);
    REQUIRE(verify_certificate(*out.cert).accepted);
  }
}

TEST_CASE("prove requests and determinism") {
  ProveRequest req;
  req.group_text = "A6";
  req.p = 3;
  req.inertia_texts = {"gens=(1 2 3)(4 5 6)"};
  ProveResult a = run_prove(req);
  ProveResult b = run_prove(req);
  REQUIRE(a.kind == "PWIC-pair");
  REQUIRE(a.outcome.status == ProveOutcome::Status::Proved);
  REQUIRE(certificate_document(*a.outcome.cert).dump(2) ==
          certificate_document(*b.outcome.cert).dump(2));
}
