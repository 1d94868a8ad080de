#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "diquat/chartab.hpp"
#include "test_util.hpp"

using namespace diquat;

namespace {

std::vector<Cyclotomic> rational_row(unsigned n, std::initializer_list<long> vals) {
  std::vector<Cyclotomic> row;
  for (long v : vals) row.push_back(Cyclotomic::constant(n, Rational(v)));
  return row;
}

}  // namespace

TEST_CASE("table shapes and labels", "[chartab]") {
  auto labels = [](const GroupKind& k) { return character_table(k).row_labels; };

  CHECK(labels(GroupKind::dihedral(5)) ==
        std::vector<std::string>{"chi1", "chi2", "rho1", "rho2"});
  CHECK(labels(GroupKind::dihedral(4)) ==
        std::vector<std::string>{"chi1", "chi2", "chi3", "chi4", "rho1"});
  CHECK(labels(GroupKind::quaternion(3)) ==
        std::vector<std::string>{"chi1", "chi2", "chi3", "chi4", "rho1", "rho2"});
  CHECK(labels(GroupKind::dihedral(1)) == std::vector<std::string>{"chi1", "chi2"});
  CHECK(labels(GroupKind::dihedral(2)) ==
        std::vector<std::string>{"chi1", "chi2", "chi3", "chi4"});
  CHECK(labels(GroupKind::quaternion(1)) ==
        std::vector<std::string>{"chi1", "chi2", "chi3", "chi4"});

  for (unsigned n = 1; n <= 12; ++n) {
    CharacterTable t = character_table(GroupKind::dihedral(n));
    CHECK(t.rows.size() == t.classes.size());
    CHECK(t.rows.size() == t.class_sizes.size());
    std::size_t total = 0;
    for (std::size_t s : t.class_sizes) total += s;
    CHECK(total == t.kind.order());
    for (const Cyclotomic& v : t.rows[0]) CHECK(v == Cyclotomic::one(t.kind.field_order()));
  }
}

TEST_CASE("frozen rows from the four table families", "[chartab]") {
  // Dihedral parameter 4, columns (1, s, rs, r, r^2): rho1 = (2, 0, 0, 0, -2).
  CharacterTable d4 = character_table(GroupKind::dihedral(4));
  unsigned n4 = d4.kind.field_order();
  CHECK(d4.rows[d4.index_of_label("rho1")] == rational_row(n4, {2, 0, 0, 0, -2}));
  CHECK(d4.rows[d4.index_of_label("chi2")] == rational_row(n4, {1, 1, -1, -1, 1}));
  CHECK(d4.rows[d4.index_of_label("chi3")] == rational_row(n4, {1, -1, 1, -1, 1}));
  CHECK(d4.rows[d4.index_of_label("chi4")] == rational_row(n4, {1, -1, -1, 1, 1}));

  // Quaternion parameter 2, columns (1, a, a^2, b, ab).
  CharacterTable q2 = character_table(GroupKind::quaternion(2));
  unsigned n8 = q2.kind.field_order();
  CHECK(q2.rows[q2.index_of_label("chi3")] == rational_row(n8, {1, -1, 1, 1, -1}));
  CHECK(q2.rows[q2.index_of_label("chi4")] == rational_row(n8, {1, -1, 1, -1, 1}));
  CHECK(q2.rows[q2.index_of_label("rho1")] == rational_row(n8, {2, 0, -2, 0, 0}));

  // Quaternion parameter 3: chi3 sends b to i and ab to -i.
  CharacterTable q3 = character_table(GroupKind::quaternion(3));
  unsigned nq = q3.kind.field_order();
  Cyclotomic i = imaginary_unit(nq);
  std::size_t r3 = q3.index_of_label("chi3"), r4 = q3.index_of_label("chi4");
  CHECK(q3.value(r3, GroupElem{0, 1}) == i);
  CHECK(q3.value(r3, GroupElem{1, 1}) == -i);
  CHECK(q3.value(r3, GroupElem{1, 0}) == -Cyclotomic::one(nq));
  CHECK(q3.value(r4, GroupElem{0, 1}) == -i);
  CHECK(q3.value(r4, GroupElem{1, 1}) == i);

  // Dihedral parameter 5: rho rows carry 2cos(2 pi k/5) at the r column.
  CharacterTable d5 = character_table(GroupKind::dihedral(5));
  unsigned nd = d5.kind.field_order();
  Cyclotomic two_cos = Cyclotomic::root(nd, nd / 5) + Cyclotomic::root(nd, -(long long)(nd / 5));
  CHECK(d5.value(d5.index_of_label("rho1"), GroupElem{1, 0}) == two_cos);
  CHECK(d5.value(d5.index_of_label("rho1"), GroupElem{0, 1}).is_zero());
}

TEST_CASE("degrees", "[chartab]") {
  for (const GroupKind& kind :
       {GroupKind::dihedral(5), GroupKind::dihedral(8), GroupKind::quaternion(2),
        GroupKind::quaternion(5)}) {
    CharacterTable t = character_table(kind);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      bool linear = t.row_labels[i][0] == 'c';
      CHECK(t.degree(i) == Rational(linear ? 1 : 2));
    }
  }
}

TEST_CASE("orthogonality relations hold exactly", "[chartab]") {
  for (unsigned n = 1; n <= 16; ++n) {
    VerifyReport rep = verify_orthogonality(character_table(GroupKind::dihedral(n)));
    INFO("dihedral " << n << ": " << (rep.failures.empty() ? "" : rep.failures[0]));
    CHECK(rep.ok());
  }
  for (unsigned m = 1; m <= 8; ++m) {
    VerifyReport rep = verify_orthogonality(character_table(GroupKind::quaternion(m)));
    INFO("quaternion " << m << ": " << (rep.failures.empty() ? "" : rep.failures[0]));
    CHECK(rep.ok());
  }
}

TEST_CASE("inner products", "[chartab]") {
  CharacterTable d5 = character_table(GroupKind::dihedral(5));
  unsigned nd = d5.kind.field_order();
  CHECK(inner_product(d5, 0, 0) == Cyclotomic::one(nd));
  CHECK(inner_product(d5, 0, d5.index_of_label("rho1")).is_zero());

  CharacterTable d7 = character_table(GroupKind::dihedral(7));
  std::size_t rho1 = d7.index_of_label("rho1");
  CHECK(inner_product(d7, rho1, rho1) == Cyclotomic::one(d7.kind.field_order()));

  // Hermitian symmetry under the conjugation automorphism.
  CharacterTable q3 = character_table(GroupKind::quaternion(3));
  for (std::size_t i = 0; i < q3.rows.size(); ++i)
    for (std::size_t j = 0; j < q3.rows.size(); ++j)
      CHECK(inner_product(q3, i, j) == inner_product(q3, j, i).conj());

  CHECK_THROWS_AS(inner_product(d5, 0, 99), std::invalid_argument);
}

TEST_CASE("class-weighted sums match element sums", "[chartab]") {
  // Independent route: evaluate the first orthogonality relation by summing
  // over every group element, ignoring the class bookkeeping entirely.
  for (const GroupKind& kind : {GroupKind::dihedral(5), GroupKind::dihedral(6),
                                GroupKind::quaternion(3)}) {
    CharacterTable t = character_table(kind);
    unsigned n = kind.field_order();
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t j = 0; j < t.rows.size(); ++j) {
        Cyclotomic s = Cyclotomic::zero(n);
        for (const GroupElem& g : enumerate(kind))
          s += t.value(i, g) * t.value(j, g).conj();
        s = s * Rational(1, static_cast<long>(kind.order()));
        CHECK(s == inner_product(t, i, j));
      }
  }
}

TEST_CASE("linear rows are multiplicative", "[chartab]") {
  for (const GroupKind& kind :
       {GroupKind::dihedral(3), GroupKind::dihedral(4), GroupKind::dihedral(6),
        GroupKind::quaternion(2), GroupKind::quaternion(3)}) {
    CharacterTable t = character_table(kind);
    auto elems = enumerate(kind);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (!(t.degree(i) == Rational(1))) continue;
      for (const GroupElem& g : elems)
        for (const GroupElem& h : elems)
          REQUIRE(t.value(i, g_mul(kind, g, h)) == t.value(i, g) * t.value(i, h));
    }
  }
}

TEST_CASE("two-dimensional rows match floating cosines", "[chartab]") {
  constexpr double pi = 3.14159265358979323846;
  CharacterTable d7 = character_table(GroupKind::dihedral(7));
  for (unsigned k = 1; k <= 3; ++k) {
    std::size_t row = d7.index_of_label("rho" + std::to_string(k));
    for (unsigned i = 1; i <= 3; ++i) {
      std::complex<double> got = d7.value(row, GroupElem{i, 0}).to_complex();
      CHECK(testutil::close(got, {2.0 * std::cos(2.0 * pi * i * k / 7.0), 0.0}));
    }
  }
  CharacterTable q5 = character_table(GroupKind::quaternion(5));
  for (unsigned k = 1; k <= 4; ++k) {
    std::size_t row = q5.index_of_label("rho" + std::to_string(k));
    for (unsigned i = 1; i <= 5; ++i) {
      std::complex<double> got = q5.value(row, GroupElem{i, 0}).to_complex();
      CHECK(testutil::close(got, {2.0 * std::cos(pi * i * k / 5.0), 0.0}));
    }
  }
}
