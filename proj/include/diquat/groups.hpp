#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "diquat/cyclotomic.hpp"

namespace diquat {

enum class GroupFamily { dihedral, quaternion };

// Normal form r^i s^j (dihedral, 0 <= i < n) or a^i b^j (quaternion,
// 0 <= i < 2m), with j in {0, 1}.
struct GroupElem {
  unsigned rot = 0;
  unsigned refl = 0;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

// One of the two group families, fixed size. Dihedral n has order 2n
// (degenerate but allowed for n = 1, 2); quaternion m has order 4m
// (degenerate for m = 1, where the group is cyclic of order 4).
class GroupKind {
 public:
  static GroupKind dihedral(unsigned n) {
    if (n == 0) throw std::invalid_argument("GroupKind: dihedral parameter must be >= 1");
    return GroupKind(GroupFamily::dihedral, n);
  }
  static GroupKind quaternion(unsigned m) {
    if (m == 0) throw std::invalid_argument("GroupKind: quaternion parameter must be >= 1");
    return GroupKind(GroupFamily::quaternion, m);
  }

  GroupFamily family() const { return family_; }
  unsigned param() const { return param_; }

  bool is_dihedral() const { return family_ == GroupFamily::dihedral; }

  unsigned order() const { return is_dihedral() ? 2 * param_ : 4 * param_; }

  // Modulus of the rotation exponent: n for dihedral, 2m for quaternion.
  unsigned rotation_modulus() const { return is_dihedral() ? param_ : 2 * param_; }

  // Every character/representation entry of this group lives in
  // Q(zeta_N) for this N; all module outputs share it.
  unsigned field_order() const { return order_lcm(2 * rotation_modulus(), 4); }

  // Number of two-dimensional irreducibles: floor((n-1)/2) resp. m-1.
  unsigned two_dim_count() const {
    return is_dihedral() ? (param_ - 1) / 2 : param_ - 1;
  }
  bool has_two_dim_reps() const { return two_dim_count() > 0; }

  char rotation_letter() const { return is_dihedral() ? 'r' : 'a'; }
  char reflection_letter() const { return is_dihedral() ? 's' : 'b'; }

  std::string name() const {
    return (is_dihedral() ? std::string("dihedral(") : std::string("quaternion(")) +
           std::to_string(param_) + ")";
  }

  // Dense index of an element: reflections follow all rotations.
  std::size_t index_of(const GroupElem& g) const {
    return static_cast<std::size_t>(g.refl) * rotation_modulus() + g.rot;
  }

  friend bool operator==(const GroupKind&, const GroupKind&) = default;

 private:
  GroupKind(GroupFamily f, unsigned p) : family_(f), param_(p) {}
  GroupFamily family_;
  unsigned param_;
};

inline GroupElem g_identity() { return {0, 0}; }

inline void g_check(const GroupKind& kind, const GroupElem& g) {
  if (g.rot >= kind.rotation_modulus() || g.refl > 1)
    throw std::invalid_argument("GroupElem out of range for " + kind.name());
}

// Normal-form product. Dihedral: s r^i = r^{-i} s. Quaternion: b a^i = a^{-i} b
// and b^2 = a^m, so (a^{i1} b)(a^{i2} b^{j2}) = a^{i1 - i2 + m*j2} b^{1 ^ j2}.
inline GroupElem g_mul(const GroupKind& kind, const GroupElem& x, const GroupElem& y) {
  g_check(kind, x);
  g_check(kind, y);
  unsigned R = kind.rotation_modulus();
  long long i1 = x.rot, i2 = y.rot;
  long long rot;
  if (x.refl == 0) {
    rot = i1 + i2;
  } else if (kind.is_dihedral()) {
    rot = i1 - i2;
  } else {
    rot = i1 - i2 + static_cast<long long>(kind.param()) * y.refl;
  }
  rot %= R;
  if (rot < 0) rot += R;
  return {static_cast<unsigned>(rot), x.refl ^ y.refl};
}

inline GroupElem g_inverse(const GroupKind& kind, const GroupElem& g) {
  g_check(kind, g);
  unsigned R = kind.rotation_modulus();
  if (g.refl == 0) return {g.rot == 0 ? 0u : R - g.rot, 0};
  if (kind.is_dihedral()) return g;  // reflections are involutions
  return {(g.rot + kind.param()) % R, 1};  // (a^i b)^{-1} = a^{i+m} b
}

// All elements: rotations ascending, then the reflected/b coset ascending.
inline std::vector<GroupElem> enumerate(const GroupKind& kind) {
  std::vector<GroupElem> out;
  out.reserve(kind.order());
  for (unsigned j = 0; j <= 1; ++j)
    for (unsigned i = 0; i < kind.rotation_modulus(); ++i) out.push_back({i, j});
  return out;
}

// Conjugacy class with its members listed deterministically (rotation
// exponent ascending) and the representative used for table headers.
struct ConjClass {
  GroupElem representative;
  std::vector<GroupElem> members;
  std::size_t size() const { return members.size(); }
};

// Classes in the column order of the corresponding character table:
//   dihedral odd n = 2m+1:  1 | reflections | r^1 .. r^m
//   dihedral even n = 2m:   1 | even refl. | odd refl. | r^1 .. r^{m-1} | r^m
//   quaternion:             1 | a^1 .. a^{m-1} | a^m | b-coset evens | odds
// (Rotation classes pair r^i with r^{-i}; the listed exponent is the smaller.)
inline std::vector<ConjClass> conjugacy_classes(const GroupKind& kind) {
  std::vector<ConjClass> out;
  unsigned R = kind.rotation_modulus();
  auto rotation_class = [&](unsigned i) {
    ConjClass c;
    c.representative = {i, 0};
    c.members.push_back({i, 0});
    unsigned neg = (R - i) % R;
    if (neg != i) c.members.push_back({neg, 0});
    return c;
  };
  auto reflections = [&](unsigned start, unsigned step, GroupElem rep) {
    ConjClass c;
    c.representative = rep;
    for (unsigned i = start; i < R; i += step) c.members.push_back({i, 1});
    return c;
  };

  out.push_back(ConjClass{{0, 0}, {{0, 0}}});
  if (kind.is_dihedral()) {
    unsigned n = kind.param();
    if (n % 2 == 1) {
      out.push_back(reflections(0, 1, {0, 1}));
      for (unsigned i = 1; i <= n / 2; ++i) out.push_back(rotation_class(i));
    } else {
      out.push_back(reflections(0, 2, {0, 1}));
      out.push_back(reflections(1, 2, {1, 1}));
      for (unsigned i = 1; i <= n / 2; ++i) out.push_back(rotation_class(i));
    }
  } else {
    unsigned m = kind.param();
    for (unsigned i = 1; i <= m; ++i) out.push_back(rotation_class(i));
    out.push_back(reflections(0, 2, {0, 1}));
    out.push_back(reflections(1, 2, {1, 1}));
  }
  return out;
}

// Map from dense element index to the index of its conjugacy class.
inline std::vector<std::size_t> class_index_map(const GroupKind& kind) {
  std::vector<std::size_t> out(kind.order());
  auto classes = conjugacy_classes(kind);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const GroupElem& g : classes[c].members) out[kind.index_of(g)] = c;
  return out;
}

// Textual normal form: "1", "r", "r^3", "r^2*s", "a^5*b", "s", "b".
inline std::string render_elem(const GroupKind& kind, const GroupElem& g) {
  g_check(kind, g);
  std::string rot, refl;
  if (g.rot == 1)
    rot = std::string(1, kind.rotation_letter());
  else if (g.rot > 1)
    rot = std::string(1, kind.rotation_letter()) + "^" + std::to_string(g.rot);
  if (g.refl) refl = std::string(1, kind.reflection_letter());
  if (rot.empty() && refl.empty()) return "1";
  if (rot.empty()) return refl;
  if (refl.empty()) return rot;
  return rot + "*" + refl;
}

// Parses the render_elem grammar; exponents are reduced into normal form.
inline GroupElem parse_elem(const GroupKind& kind, const std::string& text) {
  auto fail = [&]() -> GroupElem {
    throw std::invalid_argument("parse_elem: bad element '" + text + "' for " + kind.name());
  };
  if (text == "1") return g_identity();
  std::size_t pos = 0;
  unsigned long long rot = 0;
  unsigned refl = 0;
  if (pos < text.size() && text[pos] == kind.rotation_letter()) {
    ++pos;
    rot = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
      rot = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        rot = rot * 10 + static_cast<unsigned>(text[pos] - '0');
        if (rot > 1000000) fail();
        ++pos;
      }
    }
    if (pos < text.size() && text[pos] == '*') ++pos;
  }
  if (pos < text.size() && text[pos] == kind.reflection_letter()) {
    ++pos;
    refl = 1;
  }
  if (pos != text.size() || (rot == 0 && refl == 0)) fail();
  return {static_cast<unsigned>(rot % kind.rotation_modulus()), refl};
}

}  // namespace diquat
