#pragma once
// Exact verification of the trigonometric identities underlying the
// character-table orthogonality relations: the alternating cosine sum, the
// partial cosine sum in closed form, and the per-family orthogonality sums,
// each cross-checked against the character-table inner products.

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "chartab.hpp"
#include "cyclotomic.hpp"
#include "groups.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace diquat {

// The angle p*pi/q as a reduced fraction with positive denominator.
struct RationalAngle {
  long long p;
  unsigned q;

  RationalAngle(long long p_, long long q_) {
    if (q_ == 0) throw std::invalid_argument("RationalAngle: zero denominator");
    if (q_ < 0) {
      p_ = -p_;
      q_ = -q_;
    }
    long long g = std::gcd(p_ < 0 ? -p_ : p_, q_);
    if (g > 1) {
      p_ /= g;
      q_ /= g;
    }
    p = p_;
    q = static_cast<unsigned>(q_);
  }

  // Whether the angle is an integer multiple of 2*pi.
  bool is_full_turn() const { return p % (2LL * q) == 0; }

  double value() const {
    return static_cast<double>(p) * std::acos(-1.0) / static_cast<double>(q);
  }
};

// sum_{r=0}^{n-1} (-1)^r cos(r k pi / n), which is 1 when n + k is odd and
// 0 when n + k is even. Computed exactly and certified against that rule.
inline Cyclotomic alternating_cos_sum(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k >= n)
    throw std::invalid_argument("alternating_cos_sum: need 1 <= k <= n-1");
  unsigned N = order_lcm(2 * n, 4);
  Cyclotomic sum = Cyclotomic::zero(N);
  for (unsigned r = 0; r < n; ++r) {
    Cyclotomic c = cos_pi_frac(static_cast<long long>(r) * k, n);
    sum += r % 2 ? -c : c;
  }
  Rational expected((n + k) % 2 ? 1 : 0);
  if (sum != Cyclotomic::constant(N, expected))
    throw std::logic_error("alternating_cos_sum: parity rule violated at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  return sum;
}

// sum_{r=1}^n cos(r theta) computed termwise (first) and by the closed form
// sin(theta/2 + n theta) / (2 sin(theta/2)) - 1/2 (second); the two are
// certified equal. The angle must not be a full turn, or the closed form's
// denominator vanishes.
inline std::pair<Cyclotomic, Cyclotomic> cos_partial_sum(const RationalAngle& angle,
                                                         unsigned n) {
  if (n < 1) throw std::invalid_argument("cos_partial_sum: need n >= 1");
  if (angle.is_full_turn())
    throw std::domain_error("cos_partial_sum: angle is a multiple of 2 pi");
  unsigned q = angle.q;
  long long p = angle.p % (2LL * q);  // the sum only sees the angle mod 2 pi
  unsigned N = order_lcm(4 * q, 4);

  Cyclotomic lhs = Cyclotomic::zero(N);
  for (unsigned r = 1; r <= n; ++r)
    lhs += cos_pi_frac(p * r, q).lift(N);

  // theta/2 = p pi / (2q); theta/2 + n theta = (2n+1) p pi / (2q).
  Cyclotomic half_sin = sin_pi_frac(p, 2 * q);
  Cyclotomic top_sin = sin_pi_frac(p * (2LL * n + 1), 2 * q);
  Cyclotomic rhs = top_sin * (half_sin * Rational(2)).inverse() -
                   Cyclotomic::constant(N, Rational(1, 2));
  if (lhs != rhs)
    throw std::logic_error("cos_partial_sum: closed form mismatch at p=" +
                           std::to_string(angle.p) + ", q=" + std::to_string(q) +
                           ", n=" + std::to_string(n));
  return {lhs, rhs};
}

// Floating-point version of the same identity for arbitrary angles.
// Angles too close to a full turn are rejected rather than divided by.
inline std::pair<double, double> float_cos_partial_sum(double theta, unsigned n) {
  if (n < 1) throw std::invalid_argument("float_cos_partial_sum: need n >= 1");
  double half_sin = std::sin(theta / 2.0);
  if (std::abs(half_sin) <= 1e-8)
    throw std::domain_error("float_cos_partial_sum: sin(theta/2) too close to 0");
  double lhs = 0.0;
  for (unsigned r = 1; r <= n; ++r) lhs += std::cos(r * theta);
  double rhs = std::sin(theta / 2.0 + n * theta) / (2.0 * half_sin) - 0.5;
  return {lhs, rhs};
}

namespace detail {

// Product-to-sum route for sum_{r=1}^{count} cos(a r base) cos(b r base)
// with base = p pi / q: half the sum of the two partial cosine sums at
// angles (a+b) and (a-b) times the base angle.
inline Cyclotomic cos_product_sum_via_closed_form(unsigned a, unsigned b,
                                                  long long p, unsigned q,
                                                  unsigned count, unsigned N) {
  Cyclotomic plus = cos_partial_sum(RationalAngle(p * (a + b), q), count).first;
  Cyclotomic minus = cos_partial_sum(RationalAngle(p * (a - b), q), count).first;
  return (plus.lift(N) + minus.lift(N)) * Rational(1, 2);
}

}  // namespace detail

// Every orthogonality-relation sum identity for one group family, checked
// exactly and re-derived against the character-table inner products.
inline VerifyReport orthogonality_sums(const GroupKind& kind) {
  if (!kind.has_two_dim_reps())
    throw std::invalid_argument("orthogonality_sums: " + kind.name() +
                                " has no two-dimensional representations");
  VerifyReport rep;
  CharacterTable tab = character_table(kind);
  std::string name = kind.name();
  unsigned N = tab.rows[0][0].order();
  auto cval = [&](Rational v) { return Cyclotomic::constant(N, v); };
  std::size_t nlin = kind.is_dihedral() && kind.param() % 2 ? 2 : 4;
  long long G = kind.order();

  if (kind.is_dihedral() && kind.param() % 2) {
    // Odd n = 2m+1, theta = 2 pi / n: both sums are identically -1/2.
    unsigned n = kind.param(), m = (n - 1) / 2;
    for (unsigned k = 1; k <= m; ++k) {
      Cyclotomic sum = cos_partial_sum(RationalAngle(2 * k, n), m).first.lift(N);
      rep.require(sum == cval(Rational(-1, 2)),
                  name + ": sum cos(k r theta) != -1/2 at k=" + std::to_string(k));
      Cyclotomic ip = (cval(Rational(2)) + sum * Rational(4)) * Rational(1, G);
      rep.require(ip == inner_product(tab, 0, nlin + k - 1),
                  name + ": <chi1, rho_k> rebuild mismatch at k=" + std::to_string(k));
    }
    for (unsigned a = 1; a <= m; ++a)
      for (unsigned b = 1; b <= m; ++b) {
        if (a == b) continue;
        Cyclotomic sum = Cyclotomic::zero(N);
        for (unsigned r = 1; r <= m; ++r)
          sum += (cos_pi_frac(2LL * a * r, n) * cos_pi_frac(2LL * b * r, n)).lift(N);
        rep.require(sum == cval(Rational(-1, 2)),
                    name + ": sum coscos != -1/2 at a=" + std::to_string(a) +
                        ", b=" + std::to_string(b));
        rep.require(sum == detail::cos_product_sum_via_closed_form(
                               std::max(a, b), std::min(a, b), 2, n, m, N),
                    name + ": coscos product-to-sum route disagrees at a=" +
                        std::to_string(a) + ", b=" + std::to_string(b));
        Cyclotomic ip = (cval(Rational(4)) + sum * Rational(8)) * Rational(1, G);
        rep.require(ip == inner_product(tab, nlin + a - 1, nlin + b - 1),
                    name + ": <rho_a, rho_b> rebuild mismatch at a=" +
                        std::to_string(a) + ", b=" + std::to_string(b));
      }
    return rep;
  }

  // Even dihedral n = 2m and quaternion of parameter m share the angle
  // pi/m and the parity-governed right-hand sides; they differ in the
  // weighting of the r^m class and (for quaternion) the alternating sign.
  unsigned m = kind.is_dihedral() ? kind.param() / 2 : kind.param();
  bool quat = !kind.is_dihedral();
  std::size_t row3 = quat ? 2 : 0;  // quaternion checks <chi3, .>, dihedral <chi1, .>
  for (unsigned k = 1; k + 1 <= m; ++k) {
    Cyclotomic sum = Cyclotomic::zero(N);
    for (unsigned r = 1; r + 1 <= m; ++r) {
      Cyclotomic c = cos_pi_frac(static_cast<long long>(k) * r, m).lift(N);
      sum += quat && r % 2 ? -c : c;
    }
    bool vanishes = (quat ? m + k : k) % 2;
    rep.require(sum == cval(Rational(vanishes ? 0 : -1)),
                name + ": linear-vs-rho sum wrong at k=" + std::to_string(k));
    if (quat) {
      // Equivalent route: the alternating sum over a full period, minus its
      // r = 0 term.
      Cyclotomic alt = alternating_cos_sum(m, k).lift(N);
      rep.require(sum == alt - Cyclotomic::one(N),
                  name + ": alternating-sum route disagrees at k=" + std::to_string(k));
    } else {
      Cyclotomic direct = cos_partial_sum(RationalAngle(k, m), m - 1).first.lift(N);
      rep.require(sum == direct,
                  name + ": partial-sum route disagrees at k=" + std::to_string(k));
    }
    // The r^m class contributes 2(-1)^k for even parameter but 2(-1)^{k+1}
    // for odd quaternion parameter, where chi3(a^m) = -1.
    long sgn = k % 2 ? -1 : 1;
    if (quat && m % 2) sgn = -sgn;
    Cyclotomic ip =
        (cval(Rational(2)) + sum * Rational(4) + cval(Rational(2 * sgn))) *
        Rational(1, G);
    rep.require(ip == inner_product(tab, row3, nlin + k - 1),
                name + ": inner-product rebuild mismatch at k=" + std::to_string(k));
  }
  for (unsigned a = 1; a + 1 <= m; ++a)
    for (unsigned b = 1; b + 1 <= m; ++b) {
      if (a == b) continue;
      Cyclotomic sum = Cyclotomic::zero(N);
      for (unsigned r = 1; r + 1 <= m; ++r)
        sum += (cos_pi_frac(static_cast<long long>(a) * r, m) *
                cos_pi_frac(static_cast<long long>(b) * r, m))
                   .lift(N);
      rep.require(sum == cval(Rational((a + b) % 2 ? 0 : -1)),
                  name + ": coscos sum wrong at a=" + std::to_string(a) +
                      ", b=" + std::to_string(b));
      rep.require(sum == detail::cos_product_sum_via_closed_form(
                             std::max(a, b), std::min(a, b), 1, m, m - 1, N),
                  name + ": coscos product-to-sum route disagrees at a=" +
                      std::to_string(a) + ", b=" + std::to_string(b));
      long sgn = (a + b) % 2 ? -1 : 1;
      Cyclotomic ip =
          (cval(Rational(4)) + sum * Rational(8) + cval(Rational(4 * sgn))) *
          Rational(1, G);
      rep.require(ip == inner_product(tab, nlin + a - 1, nlin + b - 1),
                  name + ": <rho_a, rho_b> rebuild mismatch at a=" +
                      std::to_string(a) + ", b=" + std::to_string(b));
    }
  return rep;
}

}  // namespace diquat
