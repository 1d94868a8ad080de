#pragma once
// The explicit algebra isomorphism psi: C[Q_8] -> C[D_8], its inverse, the
// quadratic constraint system its construction solves, and the induced
// correspondence between the two complete sets of primitive idempotents.
//
// Everything here is specific to the smallest pair (m = 2, n = 4); all
// coefficients live in Q(i), i.e. cyclotomic order 4.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"
#include "cyclotomic.hpp"
#include "groups.hpp"
#include "idempotents.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace diquat {

// Coordinate bases fixed by the construction: the source coordinates are
// (1, a^2, a, a^3, b, a^2b, ab, a^3b), the target coordinates
// (1, r, r^2, r^3, s, rs, r^2s, r^3s).
inline const std::array<GroupElem, 8>& q8_basis_order() {
  static const std::array<GroupElem, 8> order{
      GroupElem{0, 0}, GroupElem{2, 0}, GroupElem{1, 0}, GroupElem{3, 0},
      GroupElem{0, 1}, GroupElem{2, 1}, GroupElem{1, 1}, GroupElem{3, 1}};
  return order;
}

inline const std::array<GroupElem, 8>& d8_basis_order() {
  static const std::array<GroupElem, 8> order{
      GroupElem{0, 0}, GroupElem{1, 0}, GroupElem{2, 0}, GroupElem{3, 0},
      GroupElem{0, 1}, GroupElem{1, 1}, GroupElem{2, 1}, GroupElem{3, 1}};
  return order;
}

// The matrix of psi in those coordinates: entry [row][col] is the
// coefficient of the row-th target basis element in the image of the
// col-th source basis element.
using BasisMap = std::vector<std::vector<Cyclotomic>>;

class IsoQ8D8 {
 public:
  IsoQ8D8()
      : src_(GroupKind::quaternion(2)), dst_(GroupKind::dihedral(4)) {
    build_images();
    build_inverse();
  }

  const GroupKind& source() const { return src_; }
  const GroupKind& target() const { return dst_; }

  // psi on a basis element of the source group.
  const AlgebraElement& image_of(const GroupElem& g) const {
    g_check(src_, g);
    return image_[src_.index_of(g)];
  }

  const BasisMap& matrix() const { return matrix_; }

  AlgebraElement psi(const AlgebraElement& x) const {
    if (!(x.kind() == src_))
      throw std::invalid_argument("psi: operand lives in " + x.kind().name());
    AlgebraElement y = AlgebraElement::zero(dst_, 4);
    for (const auto& [g, c] : x.terms()) y += image_[src_.index_of(g)] * c;
    return y;
  }

  AlgebraElement psi_inv(const AlgebraElement& y) const {
    if (!(y.kind() == dst_))
      throw std::invalid_argument("psi_inv: operand lives in " + y.kind().name());
    AlgebraElement x = AlgebraElement::zero(src_, 4);
    for (const auto& [h, c] : y.terms()) x += preimage_[dst_.index_of(h)] * c;
    return x;
  }

 private:
  void build_images() {
    Rational h(1, 2);
    Cyclotomic ih = imaginary_unit(4) * h;
    auto refl_image = [&](Cyclotomic s0, Cyclotomic s1, Cyclotomic s2, Cyclotomic s3) {
      AlgebraElement e = AlgebraElement::zero(dst_, 4);
      e.add_term(GroupElem{0, 1}, s0);
      e.add_term(GroupElem{1, 1}, s1);
      e.add_term(GroupElem{2, 1}, s2);
      e.add_term(GroupElem{3, 1}, s3);
      return e;
    };
    Cyclotomic ch = Cyclotomic::constant(4, h);

    image_.assign(8, AlgebraElement::zero(dst_, 4));
    auto set = [&](unsigned rot, unsigned refl, AlgebraElement img) {
      image_[src_.index_of(GroupElem{rot, refl})] = std::move(img);
    };
    set(0, 0, AlgebraElement::basis(dst_, 4, GroupElem{0, 0}));  // 1 -> 1
    set(2, 0, AlgebraElement::basis(dst_, 4, GroupElem{2, 0}));  // a^2 -> r^2
    set(1, 1, AlgebraElement::basis(dst_, 4, GroupElem{3, 0}));  // ab -> r^3
    set(3, 1, AlgebraElement::basis(dst_, 4, GroupElem{1, 0}));  // a^3b -> r
    set(1, 0, refl_image(ch, -ih, ch, ih));    // a   -> (s - i rs + r^2s + i r^3s)/2
    set(3, 0, refl_image(ch, ih, ch, -ih));    // a^3 -> (s + i rs + r^2s - i r^3s)/2
    set(0, 1, refl_image(-ih, ch, ih, ch));    // b   -> (-i s + rs + i r^2s + r^3s)/2
    set(2, 1, refl_image(ih, ch, -ih, ch));    // a^2b-> (i s + rs - i r^2s + r^3s)/2
  }

  void build_inverse() {
    matrix_.assign(8, std::vector<Cyclotomic>(8, Cyclotomic::zero(4)));
    for (std::size_t col = 0; col < 8; ++col) {
      const AlgebraElement& img = image_[src_.index_of(q8_basis_order()[col])];
      for (std::size_t row = 0; row < 8; ++row)
        matrix_[row][col] = img.coeff(d8_basis_order()[row]);
    }
    BasisMap inv;
    try {
      inv = invert_matrix(matrix_);
    } catch (const std::domain_error&) {
      throw std::logic_error("IsoQ8D8: basis map is singular");
    }
    preimage_.assign(8, AlgebraElement::zero(src_, 4));
    for (std::size_t row = 0; row < 8; ++row) {
      AlgebraElement pre = AlgebraElement::zero(src_, 4);
      for (std::size_t col = 0; col < 8; ++col)
        pre.add_term(q8_basis_order()[col], inv[col][row]);
      preimage_[dst_.index_of(d8_basis_order()[row])] = std::move(pre);
    }
  }

  GroupKind src_, dst_;
  std::vector<AlgebraElement> image_;     // by source element index
  std::vector<AlgebraElement> preimage_;  // by target element index
  BasisMap matrix_;
};

// Multiplicativity on all 64 ordered basis pairs, unit preservation, and
// bijectivity (round trips on both bases).
inline VerifyReport verify_homomorphism(const IsoQ8D8& iso) {
  VerifyReport rep;
  const GroupKind& q8 = iso.source();
  const GroupKind& d8 = iso.target();
  rep.require(iso.psi(AlgebraElement::one(q8, 4)) == AlgebraElement::one(d8, 4),
              "psi(1) != 1");
  std::vector<GroupElem> elems = enumerate(q8);
  for (const GroupElem& g : elems)
    for (const GroupElem& h : elems) {
      AlgebraElement lhs = iso.image_of(g_mul(q8, g, h));
      AlgebraElement rhs = iso.image_of(g) * iso.image_of(h);
      rep.require(lhs == rhs, "psi(g h) != psi(g) psi(h) at g=" +
                                  render_elem(q8, g) + ", h=" + render_elem(q8, h));
    }
  for (const GroupElem& g : elems)
    rep.require(iso.psi_inv(iso.image_of(g)) == AlgebraElement::basis(q8, 4, g),
                "psi_inv(psi(g)) != g at g=" + render_elem(q8, g));
  for (const GroupElem& h : enumerate(d8)) {
    AlgebraElement basis = AlgebraElement::basis(d8, 4, h);
    rep.require(iso.psi(iso.psi_inv(basis)) == basis,
                "psi(psi_inv(h)) != h at h=" + render_elem(d8, h));
  }
  return rep;
}

// One candidate solution of the construction's constraint system:
// coefficients k_1..k_12 in Q(i), stored at cyclotomic order 4.
using KTuple = std::array<Cyclotomic, 12>;

// The solution the construction settles on: k_2 = -1, k_7 = k_12 = -1/2,
// k_8 = k_11 = -i/2, all others zero.
inline KTuple stated_k_tuple() {
  KTuple k;
  k.fill(Cyclotomic::zero(4));
  Cyclotomic half = Cyclotomic::constant(4, Rational(1, 2));
  Cyclotomic ihalf = imaginary_unit(4) * Rational(1, 2);
  k[1] = -Cyclotomic::one(4);  // k_2
  k[6] = -half;                // k_7
  k[7] = -ihalf;               // k_8
  k[10] = -ihalf;              // k_11
  k[11] = -half;               // k_12
  return k;
}

// Generator images determined by a k-tuple:
//   psi(ab) = r  + (k_1 1 + k_2 r + k_3 rs + k_4 s)(1 - r^2),
//   psi(b)  = rs + (k_5 1 + k_6 r + k_7 rs + k_8 s)(1 - r^2),
//   psi(a)  = s  + (k_9 1 + k_10 r + k_11 rs + k_12 s)(1 - r^2).
struct KGeneratorImages {
  AlgebraElement ab, b, a;
};

inline KGeneratorImages k_generator_images(const KTuple& k) {
  GroupKind d8 = GroupKind::dihedral(4);
  AlgebraElement annihilator = AlgebraElement::basis(d8, 4, GroupElem{0, 0}) -
                               AlgebraElement::basis(d8, 4, GroupElem{2, 0});
  auto images = [&](GroupElem base, std::size_t off) {
    AlgebraElement corr = AlgebraElement::zero(d8, 4);
    corr.add_term(GroupElem{0, 0}, k[off]);
    corr.add_term(GroupElem{1, 0}, k[off + 1]);
    corr.add_term(GroupElem{1, 1}, k[off + 2]);
    corr.add_term(GroupElem{0, 1}, k[off + 3]);
    return AlgebraElement::basis(d8, 4, base) + corr * annihilator;
  };
  return {images(GroupElem{1, 0}, 0),   // ab: base r, k_1..k_4
          images(GroupElem{1, 1}, 4),   // b:  base rs, k_5..k_8
          images(GroupElem{0, 1}, 8)};  // a:  base s, k_9..k_12
}

// Checks a k-tuple against the full constraint system: the three quadratic
// blocks (four equations each), the three consistency products the
// construction requires on top of them, and the squares going to r^2.
inline VerifyReport verify_k_system(const KTuple& k) {
  VerifyReport rep;
  Cyclotomic zero = Cyclotomic::zero(4);
  Cyclotomic one = Cyclotomic::one(4);
  Cyclotomic two = Cyclotomic::constant(4, Rational(2));
  Cyclotomic four = Cyclotomic::constant(4, Rational(4));
  auto sq = [](const Cyclotomic& c) { return c * c; };
  auto eq = [&](std::size_t idx, const Cyclotomic& lhs) {
    rep.require(lhs == zero,
                "k-system equation " + std::to_string(idx) + " violated");
  };

  // Block for psi(ab): k_1..k_4 (indices 0..3).
  eq(1, k[0] * k[2]);
  eq(2, k[0] * k[3]);
  eq(3, four * k[0] * k[1] + two * k[0]);
  eq(4, two * sq(k[0]) + two * sq(k[2]) + two * sq(k[3]) - two * sq(k[1]) - two * k[1]);
  // Block for psi(b): k_5..k_8 (indices 4..7).
  eq(5, k[4] * k[5]);
  eq(6, k[4] * k[7]);
  eq(7, four * k[4] * k[6] + two * k[4]);
  eq(8, two * sq(k[4]) + two * sq(k[6]) + two * sq(k[7]) - two * sq(k[5]) + one + two * k[6]);
  // Block for psi(a): k_9..k_12 (indices 8..11).
  eq(9, k[8] * k[9]);
  eq(10, k[8] * k[10]);
  eq(11, four * k[8] * k[11] + two * k[8]);
  eq(12, two * sq(k[8]) + two * sq(k[10]) + two * sq(k[11]) - two * sq(k[9]) + one + two * k[11]);

  KGeneratorImages im = k_generator_images(k);
  GroupKind d8 = GroupKind::dihedral(4);
  AlgebraElement r2 = AlgebraElement::basis(d8, 4, GroupElem{2, 0});
  rep.require(im.a * im.b == im.ab, "consistency: psi(a) psi(b) != psi(ab)");
  rep.require(im.b * im.ab == im.a, "consistency: psi(b) psi(ab) != psi(a)");
  rep.require(im.ab * im.a == im.b, "consistency: psi(ab) psi(a) != psi(b)");
  rep.require(im.ab * im.ab == r2, "square: psi(ab)^2 != r^2");
  rep.require(im.a * im.a == r2, "square: psi(a)^2 != r^2");
  rep.require(im.b * im.b == r2, "square: psi(b)^2 != r^2");
  return rep;
}

inline VerifyReport verify_k_system() { return verify_k_system(stated_k_tuple()); }

// The six correspondences between the two complete sets of primitive
// idempotents: the four one-dimensional ones map across positionally, the
// two-dimensional split pair crosses over.
inline VerifyReport idempotent_correspondence(const IsoQ8D8& iso) {
  VerifyReport rep;
  IdempotentSet q = complete_set(iso.source());
  IdempotentSet d = complete_set(iso.target());
  for (std::size_t i = 0; i < 4; ++i)
    rep.require(iso.psi(q.linear[i]) == d.linear[i],
                "psi(e_" + std::to_string(i + 1) + ") mismatch");
  const SplitTriple& qs = q.pairs[0];
  const SplitTriple& ds = d.pairs[0];
  rep.require(iso.psi(qs.prime) == ds.dprime, "psi(e'_rho1) != e''_rho1 bar");
  rep.require(iso.psi(qs.dprime) == ds.prime, "psi(e''_rho1) != e'_rho1 bar");
  rep.require(iso.psi(qs.central) == ds.central, "psi(e_rho1) != e_rho1 bar");
  AlgebraElement sum = qs.prime + qs.dprime;
  for (const AlgebraElement& e : q.linear) sum += e;
  rep.require(iso.psi(sum) == AlgebraElement::one(iso.target(), 4),
              "psi(sum of all six) != 1");
  return rep;
}

}  // namespace diquat
