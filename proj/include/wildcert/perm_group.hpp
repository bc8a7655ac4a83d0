#pragma once

// Finite permutation groups backed by a base and strong generating set.
// The chain is built with the deterministic Schreier-Sims procedure, so
// orders, transversals and every derived witness are reproducible across
// runs. Groups are immutable after construction; all queries are const.

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "perm.hpp"

namespace wildcert {

class GroupError : public std::runtime_error {
 public:
  explicit GroupError(const std::string &msg) : std::runtime_error(msg) {}
};

class EnumerationOverBound : public GroupError {
 public:
  explicit EnumerationOverBound(const std::string &msg) : GroupError(msg) {}
};

class PermGroup {
 public:
  // base_hint: 0-based points the base must start with, in order (used for
  // pointwise stabilizers). Levels for hint points are created even when
  // their orbit is trivial.
  explicit PermGroup(int degree, std::vector<Perm> gens = {}, std::vector<int> base_hint = {})
      : degree_(degree) {
    if (degree < 1) throw GroupError("degree must be positive");
    for (const Perm &g : gens) {
      if (g.degree() != degree) throw GroupError("generator degree mismatch");
      if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
        gens_.push_back(g);
    }
    for (int h : base_hint) {
      if (h < 0 || h >= degree) throw GroupError("base hint out of range");
      Level lv;
      lv.base = h;
      chain_.push_back(lv);
    }
    hint_levels_ = chain_.size();
    build_chain();
  }

  static PermGroup trivial(int degree) { return PermGroup(degree); }

  int degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }
  const BigInt &order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm &g) const {
    if (g.degree() != degree_) return false;
    return sift(g).is_identity();
  }

  // Residue of g after stripping through the chain; identity iff g is a member.
  Perm sift(const Perm &g) const {
    Perm h = g;
    for (const Level &lv : chain_) {
      int p = h.image0(lv.base);
      if (!lv.transversal[p].has_value()) return h;
      h = h * lv.transversal[p]->inverse();
    }
    return h;
  }

  std::vector<int> base_points() const {
    std::vector<int> b;
    for (const Level &lv : chain_) b.push_back(lv.base + 1);
    return b;
  }

  // All elements, in chain order. Guarded by the enumeration bound.
  std::vector<Perm> elements(long long bound = 1000000) const {
    if (order_ > bound)
      throw EnumerationOverBound("group of order " + order_.str() + " exceeds enumeration bound " +
                                 std::to_string(bound));
    std::vector<Perm> result{Perm::identity(degree_)};
    for (int i = static_cast<int>(chain_.size()) - 1; i >= 0; --i) {
      std::vector<Perm> next;
      next.reserve(result.size() * chain_[i].orbit.size());
      for (const Perm &s : result)
        for (int p : chain_[i].orbit) next.push_back(s * *chain_[i].transversal[p]);
      result = std::move(next);
    }
    return result;
  }

  // Uniformly random element, via the unique chain factorization.
  Perm random_element(std::mt19937_64 &rng) const {
    Perm g = Perm::identity(degree_);
    for (int i = static_cast<int>(chain_.size()) - 1; i >= 0; --i) {
      const Level &lv = chain_[i];
      std::uniform_int_distribution<size_t> pick(0, lv.orbit.size() - 1);
      g = g * *lv.transversal[lv.orbit[pick(rng)]];
    }
    return g;
  }

  Perm random_element(uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return random_element(rng);
  }

  // Orbit of a 1-based point, ascending.
  std::vector<int> orbit(int point) const {
    if (point < 1 || point > degree_) throw GroupError("point out of range");
    std::vector<bool> seen(degree_, false);
    std::vector<int> queue{point - 1};
    seen[point - 1] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (const Perm &g : gens_) {
        int r = g.image0(queue[qi]);
        if (!seen[r]) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    std::vector<int> result;
    for (int i = 0; i < degree_; ++i)
      if (seen[i]) result.push_back(i + 1);
    return result;
  }

  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> done(degree_, false);
    for (int i = 1; i <= degree_; ++i) {
      if (done[i - 1]) continue;
      auto orb = orbit(i);
      for (int x : orb) done[x - 1] = true;
      result.push_back(std::move(orb));
    }
    return result;
  }

  bool is_transitive() const { return degree_ == 1 || static_cast<int>(orbit(1).size()) == degree_; }

  // Union of moved points of the generators, 1-based ascending.
  std::vector<int> support() const {
    std::vector<bool> moved(degree_, false);
    for (const Perm &g : gens_)
      for (int p : g.moved_points()) moved[p - 1] = true;
    std::vector<int> result;
    for (int i = 0; i < degree_; ++i)
      if (moved[i]) result.push_back(i + 1);
    return result;
  }

  // Subgroup fixing every one of the given 1-based points.
  PermGroup pointwise_stabilizer(const std::vector<int> &points) const {
    std::vector<int> hint;
    for (int p : points) {
      if (p < 1 || p > degree_) throw GroupError("point out of range");
      hint.push_back(p - 1);
    }
    PermGroup re(degree_, gens_, hint);
    return PermGroup(degree_, re.gathered_gens(re.hint_levels_));
  }

 private:
  struct Level {
    int base = 0;  // 0-based
    std::vector<Perm> gens;  // strong generators stored at this level
    std::vector<int> orbit;  // discovery order, 0-based
    std::vector<std::optional<Perm>> transversal;
  };

  // Strong generators of the level-i stabilizer: everything stored at depth >= i.
  std::vector<Perm> gathered_gens(size_t i) const {
    std::vector<Perm> out;
    for (size_t j = i; j < chain_.size(); ++j)
      out.insert(out.end(), chain_[j].gens.begin(), chain_[j].gens.end());
    return out;
  }

  void recompute_orbit(size_t i) {
    Level &lv = chain_[i];
    std::vector<Perm> gens = gathered_gens(i);
    lv.orbit.clear();
    lv.transversal.assign(degree_, std::nullopt);
    lv.orbit.push_back(lv.base);
    lv.transversal[lv.base] = Perm::identity(degree_);
    for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      int q = lv.orbit[qi];
      for (const Perm &g : gens) {
        int r = g.image0(q);
        if (!lv.transversal[r].has_value()) {
          lv.transversal[r] = *lv.transversal[q] * g;
          lv.orbit.push_back(r);
        }
      }
    }
  }

  // Stores g at the deepest level whose earlier bases it all fixes.
  size_t store_generator(const Perm &g) {
    size_t at = 0;
    while (at < chain_.size() && g.image0(chain_[at].base) == chain_[at].base) ++at;
    if (at == chain_.size()) {
      Level lv;
      for (int i = 0; i < degree_; ++i)
        if (g.image0(i) != i) {
          lv.base = i;
          break;
        }
      chain_.push_back(lv);
    }
    chain_[at].gens.push_back(g);
    return at;
  }

  void build_chain() {
    for (const Perm &g : gens_) store_generator(g);
    for (size_t i = chain_.size(); i-- > 0;) recompute_orbit(i);

    // Bottom-up verification: when level i passes, every deeper level is
    // already complete. A failed Schreier generator is stored where its
    // sift stops and verification resumes there.
    int i = static_cast<int>(chain_.size()) - 1;
    while (i >= 0) {
      recompute_orbit(i);
      std::vector<Perm> gens = gathered_gens(i);
      bool complete = true;
      for (size_t oi = 0; complete && oi < chain_[i].orbit.size(); ++oi) {
        int p = chain_[i].orbit[oi];
        for (const Perm &s : gens) {
          Perm h = *chain_[i].transversal[p] * s * chain_[i].transversal[s.image0(p)]->inverse();
          size_t j = i + 1;
          while (j < chain_.size() && !h.is_identity()) {
            int q = h.image0(chain_[j].base);
            if (!chain_[j].transversal[q].has_value()) break;
            h = h * chain_[j].transversal[q]->inverse();
            ++j;
          }
          if (!h.is_identity()) {
            size_t at = store_generator(h);
            recompute_orbit(at);
            i = static_cast<int>(at);
            complete = false;
            break;
          }
        }
      }
      if (complete) --i;
    }
    order_ = 1;
    for (size_t k = 0; k < chain_.size(); ++k) {
      recompute_orbit(k);
      order_ *= static_cast<long long>(chain_[k].orbit.size());
    }
  }

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Level> chain_;
  size_t hint_levels_ = 0;
  BigInt order_;
};

// Standard generator choices for the named families.
inline PermGroup symmetric_group(int d) {
  if (d <= 1) return PermGroup::trivial(std::max(d, 1));
  if (d == 2) return PermGroup(2, {Perm::from_images({2, 1})});
  std::vector<int> cyc(d);
  for (int i = 0; i < d; ++i) cyc[i] = (i + 1) % d + 1;
  return PermGroup(d, {parse_cycles("(1 2)", d), Perm::from_images(cyc)});
}

inline PermGroup alternating_group(int d) {
  if (d <= 2) return PermGroup::trivial(std::max(d, 1));
  if (d == 3) return PermGroup(3, {parse_cycles("(1 2 3)", 3)});
  std::string big = "(";
  int first = (d % 2 == 1) ? 1 : 2;
  for (int i = first; i <= d; ++i) big += std::to_string(i) + (i < d ? " " : ")");
  return PermGroup(d, {parse_cycles("(1 2 3)", d), parse_cycles(big, d)});
}

inline PermGroup cyclic_group(int n) {
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n + 1;
  return PermGroup(n, {Perm::from_images(cyc)});
}

}  // namespace wildcert
