#pragma once

// Claim requests shared by the CLI and the corpus runner, and the manifest
// format: one claim per line, fields separated by '|',
//   group=A6 | p=3 | inertia=gens=(1 2 3)(4 5 6) | expect=certificate
// inertia= may repeat; point= labels pair with inertia entries by position.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "group_spec.hpp"
#include "strategies.hpp"

namespace wildcert {

struct ProveRequest {
  std::string group_text;
  int p = 2;
  std::vector<std::string> inertia_texts;
  std::vector<std::string> labels;  // optional; defaults x1, x2, ...
};

struct ProveResult {
  ProveOutcome outcome;
  GroupSpec spec;
  std::string kind;  // "PWIC-pair" | "IC-pair" | "GPWIC-multi"
};

inline ProveResult run_prove(const ProveRequest &req) {
  ProveResult result;
  result.spec = parse_group_spec(req.group_text);
  const PermGroup &G = result.spec.group;
  if (req.inertia_texts.empty()) throw SpecError("at least one inertia group is required");
  std::vector<PermGroup> inertia;
  for (const std::string &t : req.inertia_texts)
    inertia.emplace_back(G.degree(), parse_inertia_gens(t, G.degree()));

  if (inertia.size() == 1) {
    const PermGroup &I = inertia[0];
    if (is_p_power(I.order(), req.p) && !I.is_trivial()) {
      result.kind = "PWIC-pair";
      result.outcome = prove_pwic(G, I, req.p);
    } else {
      result.kind = "IC-pair";
      result.outcome = prove_ic(G, I, req.p);
    }
    return result;
  }
  result.kind = "GPWIC-multi";
  std::vector<std::string> labels = req.labels;
  for (size_t i = labels.size(); i < inertia.size(); ++i)
    labels.push_back("x" + std::to_string(i + 1));
  result.outcome = prove_gpwic(G, inertia, labels, req.p,
                               result.spec.is_product() ? result.spec.factor_degrees()
                                                        : std::vector<int>{});
  return result;
}

inline std::string outcome_class(const ProveOutcome &o) {
  switch (o.status) {
    case ProveOutcome::Status::Proved: return "certificate";
    case ProveOutcome::Status::Refused: return "refusal";
    case ProveOutcome::Status::Open: return "open";
  }
  return "?";
}

struct CorpusRow {
  int line_no = 0;
  ProveRequest request;
  std::string expect;
};

inline std::vector<CorpusRow> parse_corpus(std::istream &in) {
  std::vector<CorpusRow> rows;
  std::string line;
  int line_no = 0;
  auto trim = [](const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    CorpusRow row;
    row.line_no = line_no;
    std::stringstream ss(t);
    std::string field;
    while (std::getline(ss, field, '|')) {
      std::string f = trim(field);
      if (f.rfind("group=", 0) == 0)
        row.request.group_text = trim(f.substr(6));
      else if (f.rfind("p=", 0) == 0)
        row.request.p = std::stoi(f.substr(2));
      else if (f.rfind("inertia=", 0) == 0)
        row.request.inertia_texts.push_back(trim(f.substr(8)));
      else if (f.rfind("point=", 0) == 0)
        row.request.labels.push_back(trim(f.substr(6)));
      else if (f.rfind("expect=", 0) == 0)
        row.expect = trim(f.substr(7));
      else
        throw SpecError("line " + std::to_string(line_no) + ": unknown field '" + f + "'");
    }
    if (row.request.group_text.empty() || row.expect.empty())
      throw SpecError("line " + std::to_string(line_no) + ": group= and expect= are required");
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CorpusReport {
  int total = 0;
  int mismatched = 0;
  bool verify_failures = false;
  std::string table;
};

// Runs every row, checks the outcome class, and independently verifies every
// produced certificate. Output order follows the manifest.
inline CorpusReport run_corpus(const std::vector<CorpusRow> &rows, bool verify_certs = true) {
  CorpusReport report;
  std::ostringstream table;
  for (const CorpusRow &row : rows) {
    ++report.total;
    std::string actual, note;
    try {
      ProveResult res = run_prove(row.request);
      actual = outcome_class(res.outcome);
      if (res.outcome.status == ProveOutcome::Status::Proved && verify_certs) {
        VerifyReport vr = verify_certificate(*res.outcome.cert);
        if (!vr.accepted) {
          report.verify_failures = true;
          note = " VERIFY-FAILED: " + (vr.failures.empty() ? "?" : vr.failures.front());
        }
      }
      if (res.outcome.status != ProveOutcome::Status::Proved && !res.outcome.message.empty())
        note += " (" + res.outcome.message + ")";
    } catch (const std::exception &e) {
      actual = "error";
      note = std::string(" (") + e.what() + ")";
    }
    bool ok = actual == row.expect && note.find("VERIFY-FAILED") == std::string::npos;
    if (!ok) ++report.mismatched;
    table << "line " << row.line_no << ": " << row.request.group_text << " p=" << row.request.p
          << " expected=" << row.expect << " actual=" << actual << (ok ? " OK" : " MISMATCH") << note
          << "\n";
  }
  report.table = table.str();
  return report;
}

}  // namespace wildcert
