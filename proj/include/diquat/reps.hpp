#pragma once
// Two-dimensional irreducible representations of both families and their
// linear extension to the group algebra, all in exact arithmetic.
//
// Dihedral rho_k sends r to the rotation by 2k pi/n and s to the swap matrix;
// quaternion rho_k sends a to diag(eps^k, eps^-k) with eps = zeta_2m and b to
// [[0,1],[(-1)^k,0]].  Matrices live at the kind's shared field order.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cyclotomic.hpp"
#include "groups.hpp"
#include "report.hpp"

namespace diquat {

struct Mat2 {
  // Row-major [[a, b], [c, d]].
  Cyclotomic a, b, c, d;

  static Mat2 zero(unsigned n) {
    Cyclotomic z = Cyclotomic::zero(n);
    return {z, z, z, z};
  }
  static Mat2 identity(unsigned n) {
    Cyclotomic z = Cyclotomic::zero(n), o = Cyclotomic::one(n);
    return {o, z, z, o};
  }
  static Mat2 diag(const Cyclotomic& x, const Cyclotomic& y) {
    Cyclotomic z = Cyclotomic::zero(x.order());
    return {x, z, z, y};
  }
  // E_ij with 1-based indices, the matrix with a lone 1 in row i, column j.
  static Mat2 matrix_unit(unsigned n, unsigned i, unsigned j) {
    if (i < 1 || i > 2 || j < 1 || j > 2)
      throw std::invalid_argument("Mat2::matrix_unit: indices are 1 or 2");
    Mat2 m = zero(n);
    (i == 1 ? (j == 1 ? m.a : m.b) : (j == 1 ? m.c : m.d)) = Cyclotomic::one(n);
    return m;
  }

  unsigned order() const { return a.order(); }

  Mat2 lift(unsigned n) const { return {a.lift(n), b.lift(n), c.lift(n), d.lift(n)}; }

  Cyclotomic trace() const { return a + d; }
  Cyclotomic det() const { return a * d - b * c; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const Cyclotomic& s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
  friend Mat2 operator*(const Mat2& m, const Cyclotomic& s) { return s * m; }
  friend Mat2 operator*(const Rational& s, const Mat2& m) {
    return {m.a * s, m.b * s, m.c * s, m.d * s};
  }

  Mat2 pow(unsigned long long e) const {
    Mat2 acc = identity(order());
    for (unsigned long long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  Mat2 inverse() const {
    Cyclotomic dt = det();
    if (dt.is_zero()) throw std::domain_error("Mat2::inverse: singular matrix");
    Cyclotomic s = dt.inverse();
    return {s * d, s * -b, s * -c, s * a};
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  std::string str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
  }
};

struct Rep2 {
  GroupKind kind;
  unsigned k;    // representation index
  Mat2 rot;      // image of r resp. a
  Mat2 refl;     // image of s resp. b

  unsigned field_order() const { return rot.order(); }
};

inline Rep2 rep_dihedral(unsigned n, unsigned k) {
  GroupKind kind = GroupKind::dihedral(n);
  if (n < 3)
    throw std::invalid_argument(
        "rep_dihedral: no two-dimensional representations below parameter 3");
  if (k < 1 || k > kind.two_dim_count())
    throw std::invalid_argument("rep_dihedral: index k out of range");
  unsigned N = kind.field_order();
  Cyclotomic c = cos_pi_frac(2 * static_cast<long long>(k), n).lift(N);
  Cyclotomic s = sin_pi_frac(2 * static_cast<long long>(k), n).lift(N);
  Cyclotomic z = Cyclotomic::zero(N), o = Cyclotomic::one(N);
  return {kind, k, Mat2{c, -s, s, c}, Mat2{z, o, o, z}};
}

inline Rep2 rep_quaternion(unsigned m, unsigned k) {
  GroupKind kind = GroupKind::quaternion(m);
  if (m < 2)
    throw std::invalid_argument(
        "rep_quaternion: no two-dimensional representations below parameter 2");
  if (k < 1 || k > kind.two_dim_count())
    throw std::invalid_argument("rep_quaternion: index k out of range");
  unsigned N = kind.field_order();
  long long stride = N / (2 * m);  // zeta_N^stride = eps = e^{i pi/m}
  Cyclotomic ek = Cyclotomic::root(N, stride * k);
  Cyclotomic emk = Cyclotomic::root(N, -stride * k);
  Cyclotomic z = Cyclotomic::zero(N), o = Cyclotomic::one(N);
  Cyclotomic sign = k % 2 ? -o : o;
  return {kind, k, Mat2::diag(ek, emk), Mat2{z, o, sign, z}};
}

inline Rep2 rep_of(const GroupKind& kind, unsigned k) {
  return kind.is_dihedral() ? rep_dihedral(kind.param(), k)
                            : rep_quaternion(kind.param(), k);
}

// Image of a normal form r^i s^j (resp. a^i b^j).
inline Mat2 rep_elem(const Rep2& rep, const GroupElem& g) {
  g_check(rep.kind, g);
  Mat2 m = rep.rot.pow(g.rot);
  return g.refl ? m * rep.refl : m;
}

// Exact checks of the defining relations of the kind's presentation.
inline VerifyReport verify_relations(const Rep2& rep) {
  VerifyReport out;
  unsigned N = rep.field_order();
  Mat2 I = Mat2::identity(N);
  std::string name = rep.kind.name() + " rho" + std::to_string(rep.k);
  if (rep.kind.is_dihedral()) {
    unsigned n = rep.kind.param();
    out.require(rep.rot.pow(n) == I, name + ": rot^n != I");
    out.require(rep.refl.pow(2) == I, name + ": refl^2 != I");
    out.require(rep.refl * rep.rot * rep.refl == rep.rot.inverse(),
                name + ": refl conjugation does not invert rot");
  } else {
    unsigned m = rep.kind.param();
    out.require(rep.rot.pow(2 * m) == I, name + ": rot^2m != I");
    out.require(rep.rot.pow(m) == rep.refl.pow(2), name + ": rot^m != refl^2");
    out.require(rep.refl.inverse() * rep.rot * rep.refl == rep.rot.inverse(),
                name + ": refl conjugation does not invert rot");
  }
  return out;
}

// Linear extension: sum of x(g) * rho(g) over the support of x.
inline Mat2 apply_algebra(const Rep2& rep, const AlgebraElement& x) {
  if (!(x.kind() == rep.kind))
    throw std::invalid_argument("apply_algebra: element of " + x.kind().name() +
                                " fed to a representation of " + rep.kind.name());
  unsigned N = order_lcm(rep.field_order(), x.field_order());
  Mat2 rot = rep.rot.lift(N), refl = rep.refl.lift(N);
  std::vector<Mat2> rpow{Mat2::identity(N)};
  rpow.reserve(rep.kind.rotation_modulus());
  Mat2 acc = Mat2::zero(N);
  for (const auto& [g, c] : x.terms()) {
    while (rpow.size() <= g.rot) rpow.push_back(rpow.back() * rot);
    Mat2 img = g.refl ? rpow[g.rot] * refl : rpow[g.rot];
    acc = acc + c.lift(N) * img;
  }
  return acc;
}

}  // namespace diquat
