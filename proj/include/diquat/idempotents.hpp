#pragma once
// Primitive idempotents of C[G] for both families: central idempotents from
// characters, the closed-form linear idempotents and two-dimensional splits,
// the generic matrix-unit pullback, and assembly plus certification of the
// complete orthogonal set.
//
// Closed forms follow the source formulas literally; every constructor
// certifies its output (idempotency, centrality, or the stated matrix image)
// and throws std::logic_error if a certificate fails, so a silent formula
// regression cannot escape.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "chartab.hpp"
#include "cyclotomic.hpp"
#include "groups.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "reps.hpp"

namespace diquat {

// Character averaging: e_chi = (chi(1)/|G|) sum_g chi(g^{-1}) g.
// Certified idempotent and central before returning.
inline AlgebraElement central_idempotent(const GroupKind& kind,
                                         const CharacterTable& table,
                                         std::size_t row) {
  if (!(table.kind == kind))
    throw std::invalid_argument("central_idempotent: table belongs to " +
                                table.kind.name());
  if (row >= table.rows.size())
    throw std::invalid_argument("central_idempotent: row index out of range");
  unsigned N = kind.field_order();
  const std::vector<std::size_t>& cmap = class_index_map(kind);
  Rational scale = table.degree(row) * Rational(1, static_cast<long>(kind.order()));
  AlgebraElement e = AlgebraElement::zero(kind, N);
  for (const GroupElem& g : enumerate(kind)) {
    std::size_t cls = cmap[kind.index_of(g_inverse(kind, g))];
    e.add_term(g, table.rows[row][cls] * scale);
  }
  if (!is_idempotent(e) || !is_central(e))
    throw std::logic_error("central_idempotent: certification failed for row " +
                           table.row_labels[row] + " of " + kind.name());
  return e;
}

namespace detail {

inline void certify_idempotents(const std::vector<AlgebraElement>& es,
                                const std::string& what) {
  for (const AlgebraElement& e : es)
    if (!is_idempotent(e) || !is_central(e))
      throw std::logic_error(what + ": certification failed");
}

}  // namespace detail

// The closed-form central idempotents attached to the one-dimensional
// representations: two of them for odd parameter, four for even.
inline std::vector<AlgebraElement> linear_idempotents_dihedral(unsigned n) {
  GroupKind kind = GroupKind::dihedral(n);
  unsigned N = kind.field_order();
  Rational pref(1, 2 * static_cast<long>(n));
  auto rot = [&](unsigned l) { return GroupElem{l % n, 0}; };
  auto refl = [&](unsigned l) { return GroupElem{l % n, 1}; };

  AlgebraElement e1 = AlgebraElement::zero(kind, N);
  AlgebraElement e4 = AlgebraElement::zero(kind, N);
  for (unsigned l = 1; l <= n; ++l) {
    e1.add_term(rot(l), pref);
    e1.add_term(refl(l), pref);
    e4.add_term(rot(l), pref);
    e4.add_term(refl(l), -pref);
  }
  std::vector<AlgebraElement> out;
  if (n % 2 == 1) {
    out = {e1, e4};
  } else {
    unsigned m = n / 2;
    AlgebraElement e2 = AlgebraElement::zero(kind, N);
    AlgebraElement e3 = AlgebraElement::zero(kind, N);
    e2.add_term(rot(0), pref);
    e3.add_term(rot(0), pref);
    for (unsigned l = 1; l <= n; ++l) {
      Rational sgn = l % 2 ? -pref : pref;
      e2.add_term(refl(l), sgn);
      e3.add_term(refl(l), -sgn);
    }
    for (unsigned l = 1; l + 1 <= m; ++l) {
      Rational sgn = l % 2 ? -pref : pref;
      e2.add_term(rot(l), sgn);
      e2.add_term(rot(n - l), sgn);
      e3.add_term(rot(l), sgn);
      e3.add_term(rot(n - l), sgn);
    }
    Rational mid = m % 2 ? -pref : pref;
    e2.add_term(rot(m), mid);
    e3.add_term(rot(m), mid);
    out = {e1, e2, e3, e4};
  }
  detail::certify_idempotents(out, "linear_idempotents_dihedral(" + std::to_string(n) + ")");
  return out;
}

inline std::vector<AlgebraElement> linear_idempotents_quaternion(unsigned m) {
  GroupKind kind = GroupKind::quaternion(m);
  unsigned N = kind.field_order();
  unsigned R = 2 * m;
  Rational pref(1, 4 * static_cast<long>(m));
  auto rot = [&](unsigned l) { return GroupElem{l % R, 0}; };
  auto refl = [&](unsigned l) { return GroupElem{l % R, 1}; };

  AlgebraElement e1 = AlgebraElement::zero(kind, N);
  AlgebraElement e2 = AlgebraElement::zero(kind, N);
  for (unsigned l = 1; l <= R; ++l) {
    e1.add_term(rot(l), pref);
    e1.add_term(refl(l), pref);
    e2.add_term(rot(l), pref);
    e2.add_term(refl(l), -pref);
  }

  // e3, e4 share the rotation part; the reflected part alternates and, for
  // odd m, carries the factor i.
  Cyclotomic unit = m % 2 ? imaginary_unit(N) : Cyclotomic::one(N);
  Cyclotomic rpref = Cyclotomic::constant(N, pref);
  AlgebraElement e3 = AlgebraElement::zero(kind, N);
  AlgebraElement e4 = AlgebraElement::zero(kind, N);
  e3.add_term(rot(0), pref);
  e4.add_term(rot(0), pref);
  for (unsigned l = 1; l <= R; ++l) {
    Cyclotomic c = unit * rpref;
    if (l % 2) c = -c;
    e3.add_term(refl(l), c);
    e4.add_term(refl(l), -c);
  }
  for (unsigned l = 1; l + 1 <= m; ++l) {
    Rational sgn = l % 2 ? -pref : pref;
    e3.add_term(rot(l), sgn);
    e3.add_term(rot(R - l), sgn);
    e4.add_term(rot(l), sgn);
    e4.add_term(rot(R - l), sgn);
  }
  Rational mid = m % 2 ? -pref : pref;
  e3.add_term(rot(m), mid);
  e4.add_term(rot(m), mid);

  std::vector<AlgebraElement> out{e1, e2, e3, e4};
  detail::certify_idempotents(out, "linear_idempotents_quaternion(" + std::to_string(m) + ")");
  return out;
}

inline std::vector<AlgebraElement> linear_idempotents(const GroupKind& kind) {
  return kind.is_dihedral() ? linear_idempotents_dihedral(kind.param())
                            : linear_idempotents_quaternion(kind.param());
}

// One block's primitive decomposition: the central idempotent of rho_k and
// the two primitive summands splitting it.
struct SplitTriple {
  unsigned k = 0;
  AlgebraElement central, prime, dprime;

  SplitTriple(unsigned k_, AlgebraElement c, AlgebraElement p, AlgebraElement q)
      : k(k_), central(std::move(c)), prime(std::move(p)), dprime(std::move(q)) {}
};

namespace detail {

inline void certify_split(const SplitTriple& t, const std::string& what) {
  bool ok = is_idempotent(t.central) && is_central(t.central) &&
            is_idempotent(t.prime) && is_idempotent(t.dprime) &&
            are_orthogonal(t.prime, t.dprime) &&
            t.prime + t.dprime == t.central;
  if (!ok) throw std::logic_error(what + ": certification failed");
}

}  // namespace detail

inline SplitTriple split_dihedral(unsigned n, unsigned k) {
  GroupKind kind = GroupKind::dihedral(n);
  if (n < 3 || k < 1 || k > kind.two_dim_count())
    throw std::invalid_argument("split_dihedral: index out of range");
  unsigned N = kind.field_order();
  Rational invn(1, static_cast<long>(n));

  // theta = 2 pi/n: entry l carries cos(l k theta) = cos(2lk pi/n).
  AlgebraElement central = AlgebraElement::zero(kind, N);
  AlgebraElement prime = AlgebraElement::zero(kind, N);
  AlgebraElement dprime = AlgebraElement::zero(kind, N);
  prime.add_term(GroupElem{0, 0}, invn);
  dprime.add_term(GroupElem{0, 0}, invn);
  for (unsigned l = 1; l <= n; ++l) {
    long long a = 2LL * l * k;
    Cyclotomic c = cos_pi_frac(a, n).lift(N);
    central.add_term(GroupElem{l % n, 0}, c * Rational(2) * invn);
    if (l == n) continue;
    Cyclotomic s = sin_pi_frac(a, n).lift(N);
    prime.add_term(GroupElem{l, 0}, c * invn);
    prime.add_term(GroupElem{l, 1}, s * invn);
    dprime.add_term(GroupElem{l, 0}, c * invn);
    dprime.add_term(GroupElem{l, 1}, -(s * invn));
  }
  SplitTriple t(k, std::move(central), std::move(prime), std::move(dprime));
  detail::certify_split(t, "split_dihedral(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return t;
}

inline SplitTriple split_quaternion(unsigned m, unsigned k) {
  GroupKind kind = GroupKind::quaternion(m);
  if (m < 2 || k < 1 || k > kind.two_dim_count())
    throw std::invalid_argument("split_quaternion: index out of range");
  unsigned N = kind.field_order();
  unsigned R = 2 * m;

  // vartheta = pi/m; eps = zeta_2m; prefactor -1/(2mi sin k vartheta) for odd
  // k and +1/(2mi sin k vartheta) for even k.
  Cyclotomic i = imaginary_unit(N);
  Cyclotomic sink = sin_pi_frac(k, m).lift(N);
  Cyclotomic pref =
      (Cyclotomic::constant(N, Rational(2 * static_cast<long>(m))) * i * sink).inverse();
  if (k % 2) pref = -pref;
  Cyclotomic epsk = Cyclotomic::root(N, static_cast<long long>(k) * (N / R));
  Cyclotomic epsmk = Cyclotomic::root(N, -static_cast<long long>(k) * (N / R));

  AlgebraElement central = AlgebraElement::zero(kind, N);
  AlgebraElement prime = AlgebraElement::zero(kind, N);
  AlgebraElement dprime = AlgebraElement::zero(kind, N);
  Rational invm(1, static_cast<long>(m));
  for (unsigned l = 1; l <= R; ++l) {
    Cyclotomic c = cos_pi_frac(static_cast<long long>(l) * k, m).lift(N);
    central.add_term(GroupElem{l % R, 0}, c * invm);
    GroupElem high{(m + l) % R, 0}, low{(m + l - 1) % R, 0};
    Cyclotomic pc = pref * c;
    prime.add_term(high, epsk * pc);
    prime.add_term(low, -pc);
    dprime.add_term(low, pc);
    dprime.add_term(high, -(epsmk * pc));
  }
  SplitTriple t(k, std::move(central), std::move(prime), std::move(dprime));
  detail::certify_split(t, "split_quaternion(" + std::to_string(m) + ", " + std::to_string(k) + ")");
  return t;
}

inline SplitTriple split_of(const GroupKind& kind, unsigned k) {
  return kind.is_dihedral() ? split_dihedral(kind.param(), k)
                            : split_quaternion(kind.param(), k);
}

// Which diagonal matrix unit the closed-form e' lands on under rho_k.
// Verified per family by the pullback tests, not assumed: the dihedral e'
// maps to E22 while the quaternion e' maps to E11 for either parity of k.
inline unsigned prime_unit_index(const GroupKind& kind) {
  return kind.is_dihedral() ? 2 : 1;
}

// Preimage of the diagonal matrix unit E_jj inside the block C[G]e: solves
// E_jj = sum_g c_g rho(g) exactly, then returns (sum_g c_g g) * e.  Requires
// e to be the block's central idempotent, i.e. apply_algebra(rep, e) = I.
inline AlgebraElement pullback_matrix_unit(const Rep2& rep, const AlgebraElement& e,
                                           unsigned j) {
  if (j < 1 || j > 2)
    throw std::invalid_argument("pullback_matrix_unit: diagonal index is 1 or 2");
  unsigned N = e.field_order();
  if (apply_algebra(rep, e) != Mat2::identity(N))
    throw std::invalid_argument(
        "pullback_matrix_unit: e is not the central idempotent of this block");

  const GroupKind& kind = rep.kind;
  std::vector<GroupElem> elems = enumerate(kind);
  CycMatrix sys(4, std::vector<Cyclotomic>());
  for (auto& row : sys) row.reserve(elems.size());
  for (const GroupElem& g : elems) {
    Mat2 img = rep_elem(rep, g).lift(N);
    sys[0].push_back(img.a);
    sys[1].push_back(img.b);
    sys[2].push_back(img.c);
    sys[3].push_back(img.d);
  }
  Mat2 target = Mat2::matrix_unit(N, j, j);
  std::vector<Cyclotomic> rhs{target.a, target.b, target.c, target.d};

  std::vector<Cyclotomic> coeffs;
  try {
    coeffs = solve_linear(sys, rhs);
  } catch (const std::domain_error&) {
    throw std::logic_error("pullback_matrix_unit: singular system for " + kind.name());
  }
  AlgebraElement lift = AlgebraElement::zero(kind, N);
  for (std::size_t idx = 0; idx < elems.size(); ++idx)
    lift.add_term(elems[idx], coeffs[idx]);
  AlgebraElement u = lift * e;
  if (!is_idempotent(u) || apply_algebra(rep, u) != target)
    throw std::logic_error("pullback_matrix_unit: certification failed for " +
                           kind.name());
  return u;
}

// The complete set of primitive orthogonal idempotents: all linear ones plus
// one split triple per two-dimensional representation.
struct IdempotentSet {
  GroupKind kind;
  std::vector<AlgebraElement> linear;
  std::vector<SplitTriple> pairs;

  // The primitive idempotents in presentation order: linear, then e', e''
  // per block.
  std::vector<const AlgebraElement*> primitives() const {
    std::vector<const AlgebraElement*> out;
    out.reserve(linear.size() + 2 * pairs.size());
    for (const AlgebraElement& e : linear) out.push_back(&e);
    for (const SplitTriple& t : pairs) {
      out.push_back(&t.prime);
      out.push_back(&t.dprime);
    }
    return out;
  }
};

inline IdempotentSet complete_set(const GroupKind& kind) {
  IdempotentSet s{kind, linear_idempotents(kind), {}};
  s.pairs.reserve(kind.two_dim_count());
  for (unsigned k = 1; k <= kind.two_dim_count(); ++k)
    s.pairs.push_back(split_of(kind, k));
  return s;
}

// Exact certification: partition of unity, pairwise orthogonality and
// idempotency of the primitive set, centrality of the central elements,
// block sums, and the dimension count.
inline VerifyReport verify_complete_set(const IdempotentSet& s) {
  VerifyReport rep;
  const GroupKind& kind = s.kind;
  unsigned N = kind.field_order();
  std::string name = kind.name();
  std::vector<const AlgebraElement*> prim = s.primitives();

  AlgebraElement sum = AlgebraElement::zero(kind, N);
  for (const AlgebraElement* e : prim) sum += *e;
  rep.require(sum == AlgebraElement::one(kind, N), name + ": primitive sum != 1");

  for (std::size_t i = 0; i < prim.size(); ++i)
    rep.require(is_idempotent(*prim[i]),
                name + ": primitive " + std::to_string(i) + " not idempotent");
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = i + 1; j < prim.size(); ++j)
      rep.require(are_orthogonal(*prim[i], *prim[j]),
                  name + ": primitives " + std::to_string(i) + ", " +
                      std::to_string(j) + " not orthogonal");

  for (std::size_t i = 0; i < s.linear.size(); ++i)
    rep.require(is_central(s.linear[i]),
                name + ": linear idempotent " + std::to_string(i + 1) + " not central");
  for (const SplitTriple& t : s.pairs) {
    std::string block = name + " block k=" + std::to_string(t.k);
    rep.require(is_idempotent(t.central), block + ": central not idempotent");
    rep.require(is_central(t.central), block + ": central not central");
    rep.require(t.prime + t.dprime == t.central, block + ": split does not sum");
  }

  std::size_t expected = (kind.is_dihedral() && kind.param() % 2 ? 2u : 4u) +
                         2 * kind.two_dim_count();
  rep.require(prim.size() == expected, name + ": primitive count mismatch");
  return rep;
}

}  // namespace diquat
