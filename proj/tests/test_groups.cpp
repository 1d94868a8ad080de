#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "diquat/groups.hpp"

using namespace diquat;

namespace {

std::vector<GroupKind> small_kinds() {
  return {GroupKind::dihedral(1), GroupKind::dihedral(2),  GroupKind::dihedral(3),
          GroupKind::dihedral(4), GroupKind::dihedral(5),  GroupKind::dihedral(6),
          GroupKind::quaternion(1), GroupKind::quaternion(2),
          GroupKind::quaternion(3), GroupKind::quaternion(4)};
}

using Orbit = std::set<std::pair<unsigned, unsigned>>;

Orbit conjugation_orbit(const GroupKind& kind, const GroupElem& g) {
  Orbit orbit;
  for (const GroupElem& x : enumerate(kind)) {
    GroupElem c = g_mul(kind, g_mul(kind, x, g), g_inverse(kind, x));
    orbit.insert({c.rot, c.refl});
  }
  return orbit;
}

}  // namespace

TEST_CASE("group axioms hold exhaustively", "[groups]") {
  for (const GroupKind& kind : small_kinds()) {
    auto elems = enumerate(kind);
    REQUIRE(elems.size() == kind.order());

    // Identity and inverses.
    for (const GroupElem& g : elems) {
      CHECK(g_mul(kind, g, g_identity()) == g);
      CHECK(g_mul(kind, g_identity(), g) == g);
      CHECK(g_mul(kind, g, g_inverse(kind, g)) == g_identity());
      CHECK(g_mul(kind, g_inverse(kind, g), g) == g_identity());
    }

    // Associativity on every triple (full certification at these sizes).
    for (const GroupElem& x : elems)
      for (const GroupElem& y : elems)
        for (const GroupElem& z : elems)
          CHECK(g_mul(kind, g_mul(kind, x, y), z) == g_mul(kind, x, g_mul(kind, y, z)));

    // Latin square: left translation is a bijection.
    for (const GroupElem& x : elems) {
      std::set<std::pair<unsigned, unsigned>> row;
      for (const GroupElem& y : elems) {
        GroupElem p = g_mul(kind, x, y);
        row.insert({p.rot, p.refl});
      }
      CHECK(row.size() == kind.order());
    }
  }
}

TEST_CASE("presentation relations hold", "[groups]") {
  for (unsigned n = 1; n <= 12; ++n) {
    GroupKind kind = GroupKind::dihedral(n);
    GroupElem r{n == 1 ? 0u : 1u, 0}, s{0, 1};
    GroupElem rn = g_identity();
    for (unsigned i = 0; i < n; ++i) rn = g_mul(kind, rn, {n == 1 ? 0u : 1u, 0});
    CHECK(rn == g_identity());                       // r^n = 1
    CHECK(g_mul(kind, s, s) == g_identity());        // s^2 = 1
    CHECK(g_mul(kind, g_mul(kind, s, r), s) == g_inverse(kind, r));  // s r s = r^{-1}
  }
  for (unsigned m = 1; m <= 12; ++m) {
    GroupKind kind = GroupKind::quaternion(m);
    GroupElem a{1 % (2 * m), 0}, b{0, 1};
    GroupElem a2m = g_identity();
    for (unsigned i = 0; i < 2 * m; ++i) a2m = g_mul(kind, a2m, a);
    CHECK(a2m == g_identity());                      // a^{2m} = 1
    GroupElem am = g_identity();
    for (unsigned i = 0; i < m; ++i) am = g_mul(kind, am, a);
    CHECK(g_mul(kind, b, b) == am);                  // b^2 = a^m
    GroupElem conj = g_mul(kind, g_mul(kind, g_inverse(kind, b), a), b);
    CHECK(conj == g_inverse(kind, a));               // b^{-1} a b = a^{-1}
  }
}

TEST_CASE("dihedral law matches the symmetry action on vertices", "[groups][oracle]") {
  // Independent model: (i, j) acts on Z/n by v -> i + (-1)^j v. This action
  // is faithful for n >= 3, so agreement certifies the multiplication law.
  for (unsigned n = 3; n <= 9; ++n) {
    GroupKind kind = GroupKind::dihedral(n);
    auto act = [&](const GroupElem& g, unsigned v) {
      long long w = g.refl ? -static_cast<long long>(v) : v;
      long long r = (g.rot + w) % n;
      return static_cast<unsigned>(r < 0 ? r + n : r);
    };
    for (const GroupElem& x : enumerate(kind))
      for (const GroupElem& y : enumerate(kind)) {
        GroupElem p = g_mul(kind, x, y);
        for (unsigned v = 0; v < n; ++v) CHECK(act(p, v) == act(x, act(y, v)));
      }
  }
}

TEST_CASE("quaternion inverses in closed form", "[groups]") {
  GroupKind q8 = GroupKind::quaternion(2);
  CHECK(g_inverse(q8, {0, 1}) == GroupElem{2, 1});   // b^{-1} = a^2 b = a^m b
  CHECK(g_inverse(q8, {1, 0}) == GroupElem{3, 0});   // a^{-1} = a^3
  CHECK(g_inverse(q8, {1, 1}) == GroupElem{3, 1});   // (ab)^{-1} = a^{m+1} b
  GroupKind q12 = GroupKind::quaternion(3);
  CHECK(g_inverse(q12, {0, 1}) == GroupElem{3, 1});
  CHECK(g_inverse(q12, {5, 1}) == GroupElem{2, 1});
}

TEST_CASE("conjugacy classes partition the group and are invariant", "[groups]") {
  for (const GroupKind& kind : small_kinds()) {
    auto classes = conjugacy_classes(kind);
    std::size_t total = 0;
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const auto& c : classes) {
      total += c.size();
      bool rep_in_members =
          std::find(c.members.begin(), c.members.end(), c.representative) != c.members.end();
      CHECK(rep_in_members);
      for (const GroupElem& g : c.members) CHECK(seen.insert({g.rot, g.refl}).second);
      // Invariance: conjugating every member by every group element stays inside.
      Orbit listed;
      for (const GroupElem& g : c.members) listed.insert({g.rot, g.refl});
      for (const GroupElem& g : c.members) CHECK(conjugation_orbit(kind, g) == listed);
    }
    CHECK(total == kind.order());
  }
}

TEST_CASE("class listings follow the character-table column order", "[groups]") {
  auto sizes = [](const GroupKind& kind) {
    std::vector<std::size_t> out;
    for (const auto& c : conjugacy_classes(kind)) out.push_back(c.size());
    return out;
  };

  // Even dihedral: 1 | even reflections | odd reflections | r .. r^{m-1} | r^m.
  CHECK(sizes(GroupKind::dihedral(4)) == std::vector<std::size_t>{1, 2, 2, 2, 1});
  // Odd dihedral: 1 | all n reflections | r .. r^m.
  CHECK(sizes(GroupKind::dihedral(5)) == std::vector<std::size_t>{1, 5, 2, 2});
  // Quaternion: 1 | a .. a^{m-1} | a^m | b coset split by parity.
  CHECK(sizes(GroupKind::quaternion(2)) == std::vector<std::size_t>{1, 2, 1, 2, 2});
  CHECK(sizes(GroupKind::quaternion(3)) == std::vector<std::size_t>{1, 2, 2, 1, 3, 3});
  // Degenerate kinds fall back to singleton (abelian) classes.
  CHECK(sizes(GroupKind::dihedral(1)) == std::vector<std::size_t>{1, 1});
  CHECK(sizes(GroupKind::dihedral(2)) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(sizes(GroupKind::quaternion(1)) == std::vector<std::size_t>{1, 1, 1, 1});

  // Frozen membership for the two groups the isomorphism module links.
  GroupKind q8 = GroupKind::quaternion(2);
  auto q8c = conjugacy_classes(q8);
  CHECK(q8c[1].members == std::vector<GroupElem>{{1, 0}, {3, 0}});
  CHECK(q8c[2].members == std::vector<GroupElem>{{2, 0}});
  CHECK(q8c[3].members == std::vector<GroupElem>{{0, 1}, {2, 1}});
  CHECK(q8c[4].members == std::vector<GroupElem>{{1, 1}, {3, 1}});

  GroupKind d8 = GroupKind::dihedral(4);
  auto d8c = conjugacy_classes(d8);
  CHECK(d8c[1].members == std::vector<GroupElem>{{0, 1}, {2, 1}});
  CHECK(d8c[2].members == std::vector<GroupElem>{{1, 1}, {3, 1}});
  CHECK(d8c[3].members == std::vector<GroupElem>{{1, 0}, {3, 0}});
  CHECK(d8c[4].members == std::vector<GroupElem>{{2, 0}});
}

TEST_CASE("class index map locates every element", "[groups]") {
  for (const GroupKind& kind : small_kinds()) {
    auto classes = conjugacy_classes(kind);
    auto cmap = class_index_map(kind);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const GroupElem& g : classes[c].members) CHECK(cmap[kind.index_of(g)] == c);
  }
}

TEST_CASE("element rendering and parsing round-trip", "[groups]") {
  GroupKind d8 = GroupKind::dihedral(4);
  CHECK(render_elem(d8, {0, 0}) == "1");
  CHECK(render_elem(d8, {1, 0}) == "r");
  CHECK(render_elem(d8, {3, 0}) == "r^3");
  CHECK(render_elem(d8, {0, 1}) == "s");
  CHECK(render_elem(d8, {2, 1}) == "r^2*s");

  GroupKind q12 = GroupKind::quaternion(3);
  CHECK(render_elem(q12, {5, 1}) == "a^5*b");
  CHECK(parse_elem(q12, "a^5*b") == GroupElem{5, 1});

  for (const GroupKind& kind : small_kinds())
    for (const GroupElem& g : enumerate(kind))
      CHECK(parse_elem(kind, render_elem(kind, g)) == g);

  CHECK_THROWS_AS(parse_elem(d8, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem(d8, "x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem(d8, "a^2"), std::invalid_argument);  // wrong family letter
  CHECK_THROWS_AS(parse_elem(d8, "r^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem(d8, "r^2*s*s"), std::invalid_argument);
}

TEST_CASE("enumeration order and dense indexing agree", "[groups]") {
  for (const GroupKind& kind : small_kinds()) {
    auto elems = enumerate(kind);
    for (std::size_t i = 0; i < elems.size(); ++i) CHECK(kind.index_of(elems[i]) == i);
    // Rotations first, ascending; then the reflected coset ascending.
    unsigned R = kind.rotation_modulus();
    for (unsigned i = 0; i < R; ++i) {
      CHECK(elems[i] == GroupElem{i, 0});
      CHECK(elems[R + i] == GroupElem{i, 1});
    }
  }
}

TEST_CASE("kind parameters and derived sizes", "[groups]") {
  CHECK(GroupKind::dihedral(4).order() == 8);
  CHECK(GroupKind::quaternion(2).order() == 8);
  CHECK(GroupKind::dihedral(4).field_order() == 8);
  CHECK(GroupKind::dihedral(5).field_order() == 20);
  CHECK(GroupKind::quaternion(3).field_order() == 12);
  CHECK(GroupKind::dihedral(4).two_dim_count() == 1);
  CHECK(GroupKind::dihedral(5).two_dim_count() == 2);
  CHECK(GroupKind::dihedral(2).two_dim_count() == 0);
  CHECK(GroupKind::quaternion(2).two_dim_count() == 1);
  CHECK(GroupKind::quaternion(1).two_dim_count() == 0);
  CHECK_THROWS_AS(GroupKind::dihedral(0), std::invalid_argument);
  CHECK_THROWS_AS(GroupKind::quaternion(0), std::invalid_argument);
  CHECK_THROWS_AS(g_mul(GroupKind::dihedral(3), {3, 0}, {0, 0}), std::invalid_argument);
}
