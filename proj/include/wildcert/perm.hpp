#pragma once

// Permutations of {1..d}, stored in image form (0-based internally, 1-based in
// all I/O). Composition is left-to-right: (a * b) applies a first, then b.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wildcert {

class PermError : public std::runtime_error {
 public:
  explicit PermError(const std::string &msg) : std::runtime_error(msg) {}
};

class Perm {
 public:
  Perm() = default;

  static Perm identity(int degree) {
    check_degree(degree);
    Perm p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }

  // images[i] is the image of point i+1, as 1-based points.
  static Perm from_images(const std::vector<int> &images) {
    const int d = static_cast<int>(images.size());
    check_degree(d);
    Perm p;
    p.img_.resize(d);
    std::vector<bool> seen(d, false);
    for (int i = 0; i < d; ++i) {
      int v = images[i];
      if (v < 1 || v > d) throw PermError("image out of range: " + std::to_string(v));
      if (seen[v - 1]) throw PermError("not a bijection: value " + std::to_string(v) + " repeats");
      seen[v - 1] = true;
      p.img_[i] = static_cast<uint8_t>(v - 1);
    }
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  // 1-based image.
  int operator()(int point) const {
    if (point < 1 || point > degree()) throw PermError("point out of range: " + std::to_string(point));
    return img_[point - 1] + 1;
  }

  int image0(int i) const { return img_[i]; }

  std::vector<int> images() const {
    std::vector<int> v(degree());
    for (int i = 0; i < degree(); ++i) v[i] = img_[i] + 1;
    return v;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Perm &a, const Perm &b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm &a, const Perm &b) { return a.img_ != b.img_; }
  // Image-vector order; used for containers, not for witness tie-breaks.
  friend bool operator<(const Perm &a, const Perm &b) { return a.img_ < b.img_; }

  // a then b.
  friend Perm operator*(const Perm &a, const Perm &b) {
    if (a.degree() != b.degree()) throw PermError("degree mismatch in composition");
    Perm r;
    r.img_.resize(a.img_.size());
    for (size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
    return r;
  }

  Perm power(long long e) const {
    if (e < 0) return inverse().power(-e);
    Perm base = *this;
    Perm acc = identity(degree());
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  // Lengths of all cycles on moved points, ascending.
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<uint8_t>(i)) continue;
      int len = 0;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        ++len;
        j = img_[j];
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
  }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (int len : cycle_type()) o = std::lcm(o, static_cast<unsigned long long>(len));
    return o;
  }

  int sign() const {
    int s = 1;
    for (int len : cycle_type())
      if (len % 2 == 0) s = -s;
    return s;
  }

  bool is_even() const { return sign() == 1; }

  std::vector<int> moved_points() const {
    std::vector<int> pts;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) pts.push_back(i + 1);
    return pts;
  }

  // Canonical disjoint cycles: each cycle starts at its smallest point, cycles
  // sorted by that point. Identity prints as "()".
  std::string cycle_string() const {
    std::ostringstream os;
    bool any = false;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<uint8_t>(i)) continue;
      any = true;
      os << '(';
      size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) os << ' ';
        os << (j + 1);
        first = false;
        j = img_[j];
      }
      os << ')';
    }
    return any ? os.str() : "()";
  }

  // Flattened canonical cycle decomposition, one 0 after each cycle. This is
  // the order used whenever a deterministic witness must be picked.
  std::vector<int> witness_key() const {
    std::vector<int> key;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<uint8_t>(i)) continue;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        key.push_back(static_cast<int>(j + 1));
        j = img_[j];
      }
      key.push_back(0);
    }
    return key;
  }

 private:
  static void check_degree(int d) {
    if (d < 1 || d > 200) throw PermError("degree must be in [1, 200]");
  }

  std::vector<uint8_t> img_;
};

inline bool witness_less(const Perm &a, const Perm &b) { return a.witness_key() < b.witness_key(); }

// h^{-1} g h.
inline Perm conjugate(const Perm &g, const Perm &h) { return h.inverse() * g * h; }

inline Perm commutator(const Perm &a, const Perm &b) { return a.inverse() * b.inverse() * a * b; }

// The canonical p-component of g: the power of g that has p-power order and
// together with the prime-to-p component reconstructs g.
inline Perm p_part(const Perm &g, int p) {
  unsigned long long o = g.order();
  unsigned long long pa = 1;
  while (o % p == 0) {
    o /= p;
    pa *= p;
  }
  if (pa == 1) return Perm::identity(g.degree());
  // o is now the prime-to-p part; find s with o*s = 1 mod pa.
  unsigned long long s = 1;
  while ((o % pa) * s % pa != 1) ++s;
  return g.power(static_cast<long long>(o * s));
}

// Parses a whitespace/comma tolerant product of cycles over 1..degree.
// Non-disjoint cycles compose left-to-right. "" and "()" give the identity.
inline Perm parse_cycles(const std::string &text, int degree) {
  Perm result = Perm::identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw PermError("expected '(' in cycle notation at position " + std::to_string(i));
    ++i;
    std::vector<int> cycle;
    std::vector<bool> in_cycle(degree + 1, false);
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw PermError("malformed cycle: unexpected character '" + std::string(1, text[i]) + "'");
      int v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) throw PermError("point out of range: " + std::to_string(v));
      if (in_cycle[v]) throw PermError("point repeats within a cycle: " + std::to_string(v));
      in_cycle[v] = true;
      cycle.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw PermError("unterminated cycle");
    ++i;  // ')'
    if (cycle.size() >= 2) {
      std::vector<int> imgs(degree);
      std::iota(imgs.begin(), imgs.end(), 1);
      for (size_t k = 0; k < cycle.size(); ++k) imgs[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
      result = result * Perm::from_images(imgs);
    }
    skip_ws();
  }
  return result;
}

}  // namespace wildcert
