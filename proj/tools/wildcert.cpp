// wildcert: realizability analysis and certificates for wild inertia groups
// of covers of the projective line.
//
// Subcommands:
//   analyze        structural report for a group spec
//   prove          search for a realizability certificate
//   verify         independently re-check a certificate document
//   solve-patching derive the numerical patching parameters
//   rh             tame Riemann-Hurwitz feasibility for a ramification profile
//   corpus         run a manifest of claims against expected outcomes

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "wildcert/corpus.hpp"
#include "wildcert/group_spec.hpp"
#include "wildcert/patching.hpp"
#include "wildcert/rules.hpp"
#include "wildcert/strategies.hpp"

using namespace wildcert;

namespace {

int cmd_analyze(const std::string &group_text) {
  GroupSpec spec = parse_group_spec(group_text);
  const PermGroup &G = spec.group;
  Json out;
  out["group"] = spec.canonical;
  out["degree"] = G.degree();
  out["order"] = G.order().str();
  Json quasi = Json::object();
  for (int p : {2, 3, 5, 7, 11, 13}) quasi[std::to_string(p)] = is_quasi_p(G, p);
  out["quasi_p"] = quasi;
  auto prim = primitivity(G);
  out["transitive"] = prim.transitive;
  out["primitive"] = prim.primitive;
  if (!prim.reason.empty()) out["imprimitivity_reason"] = prim.reason;
  Recognition rec = recognize_alt_or_sym(G);
  switch (rec.family) {
    case GroupFamily::Alt: out["structure"] = "Alt(" + std::to_string(rec.degree) + ")"; break;
    case GroupFamily::Sym: out["structure"] = "Sym(" + std::to_string(rec.degree) + ")"; break;
    case GroupFamily::Other:
      out["structure"] = spec.is_product() ? "product" : "unrecognized";
      break;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_prove(const ProveRequest &req, const std::string &out_path) {
  ProveResult result = run_prove(req);
  switch (result.outcome.status) {
    case ProveOutcome::Status::Proved: {
      Json doc = certificate_document(*result.outcome.cert);
      if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::ofstream f(out_path);
        f << doc.dump(2) << "\n";
      }
      return 0;
    }
    case ProveOutcome::Status::Refused: {
      Json doc{{"refusal", to_string(result.outcome.refusal)}, {"message", result.outcome.message}};
      std::cout << doc.dump(2) << "\n";
      return 2;
    }
    case ProveOutcome::Status::Open: {
      Json declined = Json::array();
      for (const std::string &d : result.outcome.declined) declined.push_back(d);
      Json doc{{"open_case", result.outcome.message}, {"declined_strategies", declined}};
      std::cout << doc.dump(2) << "\n";
      return 3;
    }
  }
  return 1;
}

int cmd_verify(const std::string &path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  Json doc;
  try {
    f >> doc;
  } catch (const std::exception &e) {
    std::cout << "rejected: invalid JSON: " << e.what() << "\n";
    return 1;
  }
  Certificate cert;
  try {
    cert = certificate_from_document(doc);
  } catch (const std::exception &e) {
    std::cout << "rejected: schema violation: " << e.what() << "\n";
    return 1;
  }
  VerifyReport rep = verify_certificate(cert);
  std::cout << (rep.accepted ? "accepted" : "rejected") << " (" << rep.nodes << " nodes)\n";
  for (const std::string &a : rep.assumed) std::cout << "assumed  " << a << "\n";
  for (const std::string &fmsg : rep.failures) std::cout << "failure  " << fmsg << "\n";
  return rep.accepted ? 0 : 1;
}

int cmd_solve_patching(int p, int m, int m_prime, int h1_prime, int h2) {
  PatchingParams params = derive_params(p, m, m_prime, h1_prime, h2);
  Json out{{"p", params.p},           {"m", params.m},   {"m_prime", params.m_prime},
           {"h1_prime", params.h1_prime}, {"h2", params.h2}, {"gamma", params.gamma},
           {"h1", params.h1},         {"e", params.e}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_rh(const std::string &profile_path) {
  Json j;
  if (profile_path == "-") {
    std::cin >> j;
  } else {
    std::ifstream f(profile_path);
    if (!f) {
      std::cerr << "cannot open " << profile_path << "\n";
      return 1;
    }
    f >> j;
  }
  RamificationProfile prof;
  prof.degree = j.at("degree").get<int>();
  prof.base_genus = j.value("base_genus", 0);
  for (const auto &fiber : j.value("branch_fibers", Json::array())) {
    std::vector<int> indices;
    for (const auto &e : fiber) indices.push_back(e.get<int>());
    prof.branch_fibers.push_back(indices);
  }
  RiemannHurwitzResult r = riemann_hurwitz_tame(prof);
  Json out{{"two_g_minus_2", r.two_g_minus_2}, {"feasible", r.feasible}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_corpus(const std::string &path) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  auto rows = parse_corpus(f);
  CorpusReport report = run_corpus(rows);
  std::cout << report.table;
  std::cout << report.total - report.mismatched << "/" << report.total << " rows match\n";
  return (report.mismatched == 0 && !report.verify_failures) ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"realizability certificates for wild inertia groups"};
  app.require_subcommand(1);
  uint64_t seed = 0;

  std::string group_text;
  auto *analyze = app.add_subcommand("analyze", "structural report for a group");
  analyze->add_option("--group", group_text, "group spec, e.g. A6, S5xS7, deg=..;gens=..")->required();
  analyze->add_option("--seed", seed, "seed for randomized internals (default 0)");

  ProveRequest req;
  std::string out_path;
  auto *prove = app.add_subcommand("prove", "search for a realizability certificate");
  prove->add_option("--group", req.group_text, "group spec")->required();
  prove->add_option("--p", req.p, "characteristic (prime)")->required();
  prove->add_option("--inertia", req.inertia_texts, "inertia spec gens=<cycles>[;<cycles>...] (repeatable)")
      ->required();
  prove->add_option("--point", req.labels, "branch point label, paired with --inertia by position");
  prove->add_option("--out", out_path, "write the certificate document to a file");
  prove->add_option("--seed", seed, "seed for randomized internals (default 0)");

  std::string verify_path;
  auto *verify = app.add_subcommand("verify", "independently re-check a certificate document");
  verify->add_option("path", verify_path, "certificate JSON file")->required();

  int p = 0, m = 1, m_prime = 1, h1_prime = 1, h2 = 1;
  auto *solve = app.add_subcommand("solve-patching", "derive the numerical patching parameters");
  solve->add_option("--p", p, "characteristic (prime)")->required();
  solve->add_option("--m", m, "tame order m")->required();
  solve->add_option("--m-prime", m_prime, "order m' of the prime-to-p center part")->required();
  solve->add_option("--h1-prime", h1_prime, "conductor lower bound h1'")->required();
  solve->add_option("--h2", h2, "conductor h2")->required();

  std::string profile_path;
  auto *rh = app.add_subcommand("rh", "tame Riemann-Hurwitz feasibility");
  rh->add_option("--profile", profile_path, "profile JSON file, or - for stdin")->required();

  std::string corpus_path;
  auto *corpus = app.add_subcommand("corpus", "run a claim manifest");
  corpus->add_option("path", corpus_path, "manifest file")->required();

  CLI11_PARSE(app, argc, argv);
  default_search_seed() = seed;

  try {
    if (*analyze) return cmd_analyze(group_text);
    if (*prove) return cmd_prove(req, out_path);
    if (*verify) return cmd_verify(verify_path);
    if (*solve) return cmd_solve_patching(p, m, m_prime, h1_prime, h2);
    if (*rh) return cmd_rh(profile_path);
    if (*corpus) return cmd_corpus(corpus_path);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
