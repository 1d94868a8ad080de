#pragma once
// Irreducible character tables of the dihedral and quaternion families.
//
// Rows follow the fixed order chi1..chi4 (linear characters; two when the
// dihedral parameter is odd) then rho1, rho2, ... for the two-dimensional
// characters.  Columns follow conjugacy_classes, so rows align positionally
// with the class list.  Every entry lives in Q(zeta_N) at the kind's shared
// field order.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "groups.hpp"
#include "report.hpp"

namespace diquat {

struct CharacterTable {
  GroupKind kind;
  std::vector<ConjClass> classes;
  std::vector<std::size_t> class_sizes;
  std::vector<std::string> row_labels;
  std::vector<std::vector<Cyclotomic>> rows;

  std::size_t row_count() const { return rows.size(); }

  std::size_t index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < row_labels.size(); ++i)
      if (row_labels[i] == label) return i;
    throw std::invalid_argument("CharacterTable: no row labeled " + label);
  }

  // chi(1), always a positive rational integer.
  Rational degree(std::size_t row) const { return rows.at(row)[0].rational_value(); }

  // Extends a row to a function on group elements via class constancy.
  Cyclotomic value(std::size_t row, const GroupElem& g) const {
    return rows.at(row)[class_index_map(kind)[kind.index_of(g)]];
  }
};

inline CharacterTable character_table(const GroupKind& kind) {
  unsigned N = kind.field_order();
  unsigned R = kind.rotation_modulus();
  CharacterTable t{kind, conjugacy_classes(kind), {}, {}, {}};
  for (const ConjClass& cls : t.classes) t.class_sizes.push_back(cls.size());

  auto row_of = [&](auto&& chi) {
    std::vector<Cyclotomic> row;
    row.reserve(t.classes.size());
    for (const ConjClass& cls : t.classes) row.push_back(chi(cls.representative));
    return row;
  };
  // Linear character r^i s^j -> alpha^i beta^j (resp. a^i b^j).
  auto linear = [&](const Cyclotomic& alpha, const Cyclotomic& beta) {
    return row_of([&](const GroupElem& g) {
      Cyclotomic v = Cyclotomic::one(N);
      if (g.rot % 2 == 1) v = alpha;
      return g.refl ? v * beta : v;
    });
  };
  Cyclotomic one = Cyclotomic::one(N), neg = -one;

  if (kind.is_dihedral() && kind.param() % 2 == 1) {
    t.row_labels = {"chi1", "chi2"};
    t.rows.push_back(linear(one, one));
    t.rows.push_back(linear(one, neg));
  } else if (kind.is_dihedral()) {
    t.row_labels = {"chi1", "chi2", "chi3", "chi4"};
    t.rows.push_back(linear(one, one));
    t.rows.push_back(linear(neg, one));
    t.rows.push_back(linear(neg, neg));
    t.rows.push_back(linear(one, neg));
  } else if (kind.param() % 2 == 1) {  // quaternion, m odd
    Cyclotomic i = imaginary_unit(N);
    t.row_labels = {"chi1", "chi2", "chi3", "chi4"};
    t.rows.push_back(linear(one, one));
    t.rows.push_back(linear(one, neg));
    t.rows.push_back(linear(neg, i));
    t.rows.push_back(linear(neg, -i));
  } else {  // quaternion, m even
    t.row_labels = {"chi1", "chi2", "chi3", "chi4"};
    t.rows.push_back(linear(one, one));
    t.rows.push_back(linear(one, neg));
    t.rows.push_back(linear(neg, one));
    t.rows.push_back(linear(neg, neg));
  }

  // Two-dimensional rows: rho_k is 2cos of the rotation angle, zero on
  // reflected elements.  zeta_R^(ik) + zeta_R^(-ik) equals 2cos(2pi ik/n)
  // for dihedral and 2cos(pi ik/m) for quaternion.
  unsigned stride = N / R;
  for (unsigned k = 1; k <= kind.two_dim_count(); ++k) {
    t.row_labels.push_back("rho" + std::to_string(k));
    t.rows.push_back(row_of([&](const GroupElem& g) {
      if (g.refl) return Cyclotomic::zero(N);
      unsigned e = static_cast<unsigned>((static_cast<unsigned long long>(g.rot) * k) % R);
      return Cyclotomic::root(N, static_cast<long long>(e) * stride) +
             Cyclotomic::root(N, -static_cast<long long>(e) * stride);
    }));
  }
  return t;
}

// First orthogonality form: (1/|G|) sum over classes of size * chi_i * conj(chi_j).
inline Cyclotomic inner_product(const CharacterTable& t, std::size_t i, std::size_t j) {
  if (i >= t.rows.size() || j >= t.rows.size())
    throw std::invalid_argument("inner_product: row index out of range");
  unsigned N = t.kind.field_order();
  // Accumulate densely by exponent: summing into a sparse partial sum would
  // re-merge its whole support once per class.
  std::vector<Rational> acc(detail::cyc_context(N).degree);
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    Cyclotomic term = t.rows[i][c] * t.rows[j][c].conj() *
                      Rational(static_cast<long>(t.class_sizes[c]));
    for (const auto& [e, q] : term.terms()) acc[e] += q;
  }
  return Cyclotomic::from_coeffs(N, acc) *
         Rational(1, static_cast<long>(t.kind.order()));
}

// Row orthonormality, column orthogonality, and the degree-sum identity.
inline VerifyReport verify_orthogonality(const CharacterTable& t) {
  VerifyReport rep;
  unsigned N = t.kind.field_order();
  std::size_t rows = t.rows.size(), cols = t.classes.size();
  long order = static_cast<long>(t.kind.order());

  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) {
      Cyclotomic want = i == j ? Cyclotomic::one(N) : Cyclotomic::zero(N);
      rep.require(inner_product(t, i, j) == want,
                  t.kind.name() + ": <" + t.row_labels[i] + ", " + t.row_labels[j] +
                      "> != " + (i == j ? "1" : "0"));
    }

  std::vector<std::vector<Cyclotomic>> conj_rows(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    conj_rows[i].reserve(cols);
    for (std::size_t d = 0; d < cols; ++d) conj_rows[i].push_back(t.rows[i][d].conj());
  }
  unsigned deg = detail::cyc_context(N).degree;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t d = 0; d < cols; ++d) {
      std::vector<Rational> acc(deg);
      for (std::size_t i = 0; i < rows; ++i) {
        Cyclotomic term = t.rows[i][c] * conj_rows[i][d];
        for (const auto& [e, q] : term.terms()) acc[e] += q;
      }
      Cyclotomic s = Cyclotomic::from_coeffs(N, acc);
      Cyclotomic want =
          c == d ? Cyclotomic::constant(
                       N, Rational(order, static_cast<long>(t.class_sizes[c])))
                 : Cyclotomic::zero(N);
      rep.require(s == want, t.kind.name() + ": column pair (" +
                                 render_elem(t.kind, t.classes[c].representative) +
                                 ", " +
                                 render_elem(t.kind, t.classes[d].representative) +
                                 ") fails second orthogonality");
    }

  Rational degsq(0);
  for (std::size_t i = 0; i < rows; ++i) degsq += t.degree(i) * t.degree(i);
  rep.require(degsq == Rational(order),
              t.kind.name() + ": sum of squared degrees != |G|");
  rep.require(rows == cols, t.kind.name() + ": row count != class count");
  return rep;
}

}  // namespace diquat
