#pragma once

// Group specification grammar: named families A<d>, S<d>, C<n>, products
// joined with 'x' (blocks in listed order), and explicit generator lists
// "deg=<d>;gens=<cycles>;<cycles>;...".

#include <sstream>
#include <string>
#include <vector>

#include "perm_group.hpp"
#include "product.hpp"

namespace wildcert {

class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string &msg) : std::runtime_error(msg) {}
};

struct GroupSpec {
  PermGroup group = PermGroup::trivial(1);
  std::string canonical;                      // normalized text
  std::vector<std::pair<char, int>> factors;  // ('A'|'S'|'C', n); empty for explicit gens

  bool is_product() const { return factors.size() >= 2; }
  std::vector<int> factor_degrees() const {
    std::vector<int> out;
    for (auto [k, n] : factors) out.push_back(n);
    return out;
  }
};

namespace detail_spec {

constexpr int kMaxDegree = 64;

inline PermGroup family_group(char kind, int n) {
  if (n < 1) throw SpecError("family degree must be positive");
  if (n > kMaxDegree) throw SpecError("degree exceeds the supported bound of 64");
  switch (kind) {
    case 'A': return alternating_group(n);
    case 'S': return symmetric_group(n);
    case 'C': return cyclic_group(n);
  }
  throw SpecError("unknown family");
}

inline std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace detail_spec

inline GroupSpec parse_group_spec(const std::string &text_in) {
  using namespace detail_spec;
  std::string text = trim(text_in);
  if (text.empty()) throw SpecError("empty group specification");

  if (text.rfind("deg=", 0) == 0) {
    auto parts = split(text, ';');
    int degree = 0;
    std::vector<Perm> gens;
    bool in_gens = false;
    for (const std::string &raw : parts) {
      std::string part = trim(raw);
      if (part.rfind("deg=", 0) == 0) {
        degree = std::stoi(part.substr(4));
        if (degree < 1 || degree > kMaxDegree) throw SpecError("degree out of range");
      } else if (part.rfind("gens=", 0) == 0) {
        in_gens = true;
        std::string body = part.substr(5);
        if (!trim(body).empty()) gens.push_back(parse_cycles(body, degree));
      } else if (in_gens) {
        if (!part.empty()) gens.push_back(parse_cycles(part, degree));
      } else {
        throw SpecError("unexpected field in explicit group spec: " + part);
      }
    }
    if (degree == 0) throw SpecError("explicit group spec needs deg=");
    GroupSpec spec;
    spec.group = PermGroup(degree, gens);
    std::string canon = "deg=" + std::to_string(degree) + ";gens=";
    for (size_t i = 0; i < gens.size(); ++i)
      canon += (i ? ";" : "") + gens[i].cycle_string();
    spec.canonical = canon;
    return spec;
  }

  GroupSpec spec;
  for (const std::string &raw : split(text, 'x')) {
    std::string part = trim(raw);
    if (part.size() < 2) throw SpecError("malformed family: '" + part + "'");
    char kind = static_cast<char>(toupper(static_cast<unsigned char>(part[0])));
    if (kind != 'A' && kind != 'S' && kind != 'C')
      throw SpecError("unknown family '" + std::string(1, part[0]) + "'");
    int n = 0;
    for (size_t i = 1; i < part.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(part[i]))) throw SpecError("malformed degree in '" + part + "'");
      n = n * 10 + (part[i] - '0');
    }
    spec.factors.emplace_back(kind, n);
  }
  if (spec.factors.size() == 1) {
    auto [kind, n] = spec.factors[0];
    spec.group = family_group(kind, n);
    spec.canonical = std::string(1, kind) + std::to_string(n);
    return spec;
  }
  std::vector<PermGroup> groups;
  int total = 0;
  std::string canon;
  for (auto [kind, n] : spec.factors) {
    groups.push_back(family_group(kind, n));
    total += groups.back().degree();
    canon += (canon.empty() ? "" : "x") + std::string(1, kind) + std::to_string(n);
  }
  if (total > kMaxDegree) throw SpecError("product degree exceeds the supported bound of 64");
  auto [prod, ps] = direct_product(std::move(groups));
  spec.group = std::move(prod);
  spec.canonical = canon;
  return spec;
}

// Inertia specifications: "gens=<cycles>;<cycles>;..." in the group's numbering.
inline std::vector<Perm> parse_inertia_gens(const std::string &text_in, int degree) {
  using namespace detail_spec;
  std::string text = trim(text_in);
  if (text.rfind("gens=", 0) != 0) throw SpecError("inertia spec must start with gens=");
  std::vector<Perm> gens;
  for (const std::string &raw : split(text.substr(5), ';')) {
    std::string part = trim(raw);
    if (!part.empty()) gens.push_back(parse_cycles(part, degree));
  }
  if (gens.empty()) throw SpecError("inertia spec has no generators");
  return gens;
}

}  // namespace wildcert
