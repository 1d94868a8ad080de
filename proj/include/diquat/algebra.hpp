#pragma once
// Group algebra C[G] for the dihedral and quaternion families.
//
// An AlgebraElement is a sparse map from group normal forms to cyclotomic
// coefficients, all living in one Q(zeta_N).  The convolution product first
// tries an overflow-checked int64 kernel (common denominator per operand,
// dense integer accumulator per output element) and falls back to exact
// rational accumulation when the bounds do not certify.  Both routes produce
// identical canonical results; the fast path exists because completeness
// sweeps multiply thousands of idempotent pairs.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "groups.hpp"

namespace diquat {

class AlgebraElement;

namespace detail {
struct IntOperand;
AlgebraElement mul_int64_path(const AlgebraElement& x, const AlgebraElement& y,
                              const IntOperand& xi, const IntOperand& yi,
                              std::int64_t den);
}  // namespace detail

AlgebraElement mul_rational_path(const AlgebraElement& x, const AlgebraElement& y);

class AlgebraElement {
 public:
  using Term = std::pair<GroupElem, Cyclotomic>;

  AlgebraElement(GroupKind kind, unsigned field_order)
      : kind_(kind), field_order_(field_order) {
    detail::cyc_context(field_order);  // validates the order
  }

  static AlgebraElement zero(GroupKind kind, unsigned field_order) {
    return AlgebraElement(kind, field_order);
  }

  // The multiplicative unit: the group identity with coefficient 1.
  static AlgebraElement one(GroupKind kind, unsigned field_order) {
    return basis(kind, field_order, g_identity());
  }

  static AlgebraElement basis(GroupKind kind, unsigned field_order,
                              const GroupElem& g) {
    AlgebraElement x(kind, field_order);
    g_check(kind, g);
    x.terms_.emplace_back(g, Cyclotomic::one(field_order));
    return x;
  }

  // Accumulates arbitrary (element, coefficient) pairs; duplicates add up,
  // zero totals are dropped, coefficients are lifted into Q(zeta_N).
  static AlgebraElement from_terms(GroupKind kind, unsigned field_order,
                                   const std::vector<Term>& terms) {
    AlgebraElement x(kind, field_order);
    for (const auto& [g, c] : terms) x.add_term(g, c);
    return x;
  }

  const GroupKind& kind() const { return kind_; }
  unsigned field_order() const { return field_order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Cyclotomic coeff(const GroupElem& g) const {
    g_check(kind_, g);
    std::size_t idx = kind_.index_of(g);
    for (const auto& [h, c] : terms_)
      if (kind_.index_of(h) == idx) return c;
    return Cyclotomic::zero(field_order_);
  }

  void add_term(const GroupElem& g, const Cyclotomic& coeff) {
    g_check(kind_, g);
    if (coeff.is_zero()) return;
    Cyclotomic c = coeff.order() == field_order_ ? coeff : coeff.lift(field_order_);
    std::size_t idx = kind_.index_of(g);
    auto it = terms_.begin();
    while (it != terms_.end() && kind_.index_of(it->first) < idx) ++it;
    if (it != terms_.end() && kind_.index_of(it->first) == idx) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, Term(g, std::move(c)));
    }
  }

  void add_term(const GroupElem& g, const Rational& coeff) {
    add_term(g, Cyclotomic::constant(field_order_, coeff));
  }

  AlgebraElement lift_to(unsigned m) const {
    if (m == field_order_) return *this;
    AlgebraElement out(kind_, m);  // Cyclotomic::lift enforces N | m
    out.terms_.reserve(terms_.size());
    for (const auto& [g, c] : terms_) out.terms_.emplace_back(g, c.lift(m));
    return out;
  }

  // Sum of all coefficients (image under the augmentation map g -> 1).
  Cyclotomic augmentation() const {
    Cyclotomic s = Cyclotomic::zero(field_order_);
    for (const auto& [g, c] : terms_) s += c;
    return s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
      if (c.is_rational()) {
        Rational q = c.rational_value();
        bool neg = q.sign() < 0;
        std::string cs;
        if (out.empty()) {
          if (neg) cs = "-";
        } else {
          cs = neg ? " - " : " + ";
        }
        std::string mag = (neg ? -q : q).str();
        if (mag != "1") cs += mag + "*";
        out += cs + render_elem(kind_, g);
      } else {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + render_elem(kind_, g);
      }
    }
    return out;
  }

  AlgebraElement operator-() const {
    AlgebraElement out(kind_, field_order_);
    out.terms_.reserve(terms_.size());
    for (const auto& [g, c] : terms_) out.terms_.emplace_back(g, -c);
    return out;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return combine(a, b, false);
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return combine(a, b, true);
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const Rational& s) {
    AlgebraElement out(a.kind_, a.field_order_);
    if (s.is_zero()) return out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& [g, c] : a.terms_) out.terms_.emplace_back(g, c * s);
    return out;
  }
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
    return a * s;
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const Cyclotomic& s) {
    unsigned n = order_lcm(a.field_order_, s.order());
    AlgebraElement x = a.lift_to(n);
    Cyclotomic t = s.order() == n ? s : s.lift(n);
    AlgebraElement out(x.kind_, n);
    if (t.is_zero()) return out;
    for (const auto& [g, c] : x.terms_) {
      Cyclotomic p = c * t;
      if (!p.is_zero()) out.terms_.emplace_back(g, std::move(p));
    }
    return out;
  }
  friend AlgebraElement operator*(const Cyclotomic& s, const AlgebraElement& a) {
    return a * s;
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  // Equal iff same group and, after lifting to the common field order,
  // identical coefficient maps.  Elements of different groups are unequal.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.kind_ == b.kind_)) return false;
    if (a.field_order_ == b.field_order_) return a.terms_ == b.terms_;
    unsigned n = order_lcm(a.field_order_, b.field_order_);
    return a.lift_to(n).terms_ == b.lift_to(n).terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

 private:
  static AlgebraElement combine(const AlgebraElement& a, const AlgebraElement& b,
                                bool subtract) {
    check_same_group(a, b, subtract ? "-" : "+");
    unsigned n = order_lcm(a.field_order_, b.field_order_);
    AlgebraElement x = a.lift_to(n), y = b.lift_to(n);
    AlgebraElement out(a.kind_, n);
    const GroupKind& k = a.kind_;
    auto ia = x.terms_.begin(), ib = y.terms_.begin();
    while (ia != x.terms_.end() || ib != y.terms_.end()) {
      bool take_a;
      if (ia == x.terms_.end()) {
        take_a = false;
      } else if (ib == y.terms_.end()) {
        take_a = true;
      } else {
        std::size_t da = k.index_of(ia->first), db = k.index_of(ib->first);
        if (da == db) {
          Cyclotomic c = subtract ? ia->second - ib->second : ia->second + ib->second;
          if (!c.is_zero()) out.terms_.emplace_back(ia->first, std::move(c));
          ++ia;
          ++ib;
          continue;
        }
        take_a = da < db;
      }
      if (take_a) {
        out.terms_.push_back(*ia++);
      } else {
        out.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
        ++ib;
      }
    }
    return out;
  }

  static void check_same_group(const AlgebraElement& a, const AlgebraElement& b,
                               const char* op) {
    if (!(a.kind_ == b.kind_))
      throw std::invalid_argument(std::string("AlgebraElement: '") + op +
                                  "' mixes " + a.kind_.name() + " with " +
                                  b.kind_.name());
  }

  GroupKind kind_;
  unsigned field_order_;
  std::vector<Term> terms_;  // sorted by GroupKind::index_of, no zero coefficients

  friend AlgebraElement mul_rational_path(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement detail::mul_int64_path(const AlgebraElement&,
                                               const AlgebraElement&,
                                               const detail::IntOperand&,
                                               const detail::IntOperand&, std::int64_t);
};

namespace detail {

using IntTerms = std::vector<std::pair<unsigned, std::int64_t>>;

// One operand of the int64 convolution kernel: every coefficient scaled by a
// common denominator so the cyclotomic terms carry plain integers.
struct IntOperand {
  std::int64_t den = 1;
  __int128 total_l1 = 0;     // sum over all terms of sum |scaled numerator|
  __int128 term_l1_max = 1;  // max over group terms of the same sum
  std::vector<std::pair<std::size_t, IntTerms>> terms;  // keyed by group index
};

inline bool int_form(const AlgebraElement& x, const GroupKind& k, IntOperand& out) {
  mpz_class lcm(1);
  for (const auto& [g, c] : x.terms())
    for (const auto& [e, q] : c.terms())
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.den().get_mpz_t());
  if (!lcm.fits_slong_p()) return false;
  out.den = lcm.get_si();
  out.terms.reserve(x.terms().size());
  for (const auto& [g, c] : x.terms()) {
    IntTerms tl;
    tl.reserve(c.terms().size());
    __int128 l1 = 0;
    for (const auto& [e, q] : c.terms()) {
      mpz_class scaled = q.num() * (lcm / q.den());
      if (!scaled.fits_slong_p()) return false;
      std::int64_t v = scaled.get_si();
      tl.emplace_back(e, v);
      l1 += v < 0 ? -static_cast<__int128>(v) : static_cast<__int128>(v);
    }
    out.total_l1 += l1;
    if (l1 > out.term_l1_max) out.term_l1_max = l1;
    out.terms.emplace_back(k.index_of(g), std::move(tl));
  }
  return true;
}

inline AlgebraElement mul_int64_path(const AlgebraElement& x, const AlgebraElement& y,
                                     const IntOperand& xi, const IntOperand& yi,
                                     std::int64_t den) {
  const GroupKind& k = x.kind();
  unsigned n = x.field_order();
  const auto& ctx = cyc_context(n);
  unsigned deg = ctx.degree;
  std::vector<GroupElem> elems = enumerate(k);

  std::vector<const IntTerms*> ydense(k.order(), nullptr);
  for (const auto& [idx, tl] : yi.terms) ydense[idx] = &tl;

  // x's support inverted once: term i contributes to output g'' from
  // y's coefficient at x_i^{-1} * g''.
  std::vector<GroupElem> xinv(xi.terms.size());
  for (std::size_t i = 0; i < xi.terms.size(); ++i)
    xinv[i] = g_inverse(k, elems[xi.terms[i].first]);

  std::vector<std::int64_t> acc(ctx.order, 0);
  std::vector<unsigned char> seen(ctx.order, 0);
  std::vector<unsigned> touched;
  touched.reserve(ctx.order);
  auto add = [&](unsigned d, std::int64_t v) {
    if (!seen[d]) {
      seen[d] = 1;
      touched.push_back(d);
    }
    acc[d] += v;
  };

  AlgebraElement res = AlgebraElement::zero(k, n);
  for (const GroupElem& gpp : elems) {
    for (std::size_t i = 0; i < xi.terms.size(); ++i) {
      const auto* yt = ydense[k.index_of(g_mul(k, xinv[i], gpp))];
      if (!yt) continue;
      for (const auto& [e1, n1] : xi.terms[i].second) {
        for (const auto& [e2, n2] : *yt) {
          unsigned e = e1 + e2;
          if (e >= ctx.order) e -= ctx.order;
          std::int64_t p = n1 * n2;
          if (e < deg) {
            add(e, p);
          } else {
            for (const auto& [d, t] : ctx.redrow_i64[e - deg]) add(d, p * t);
          }
        }
      }
    }
    if (touched.empty()) continue;
    std::sort(touched.begin(), touched.end());
    SparseTerms terms;
    for (unsigned d : touched) {
      if (acc[d] != 0) terms.emplace_back(d, Rational(acc[d], den));
      acc[d] = 0;
      seen[d] = 0;
    }
    touched.clear();
    if (!terms.empty())
      res.terms_.emplace_back(gpp, Cyclotomic::from_reduced_terms(n, std::move(terms)));
  }
  return res;
}

}  // namespace detail

inline AlgebraElement mul_rational_path(const AlgebraElement& x, const AlgebraElement& y) {
  const GroupKind& k = x.kind();
  unsigned n = x.field_order();
  const auto& ctx = detail::cyc_context(n);
  auto& scratch = detail::scratch_for(ctx);
  std::vector<GroupElem> elems = enumerate(k);

  std::vector<const detail::SparseTerms*> ydense(k.order(), nullptr);
  for (const auto& [g, c] : y.terms()) ydense[k.index_of(g)] = &c.terms();

  std::vector<std::pair<GroupElem, const detail::SparseTerms*>> xinv;
  xinv.reserve(x.terms().size());
  for (const auto& [g, c] : x.terms())
    xinv.emplace_back(g_inverse(k, g), &c.terms());

  AlgebraElement res(k, n);
  for (const GroupElem& gpp : elems) {
    for (const auto& [ginv, xt] : xinv) {
      const auto* yt = ydense[k.index_of(g_mul(k, ginv, gpp))];
      if (yt) detail::accumulate_product(scratch, ctx, *xt, *yt);
    }
    auto terms = scratch.finish();
    if (!terms.empty())
      res.terms_.emplace_back(gpp, Cyclotomic::from_reduced_terms(n, std::move(terms)));
  }
  return res;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::check_same_group(a, b, "*");
  unsigned n = order_lcm(a.field_order(), b.field_order());
  AlgebraElement x = a.lift_to(n), y = b.lift_to(n);
  if (x.is_zero() || y.is_zero()) return AlgebraElement::zero(a.kind(), n);

  const auto& ctx = detail::cyc_context(n);
  if (ctx.rows_fit_i64) {
    detail::IntOperand xi, yi;
    if (detail::int_form(x, x.kind(), xi) && detail::int_form(y, y.kind(), yi)) {
      constexpr __int128 limit = static_cast<__int128>(1) << 62;
      __int128 den = static_cast<__int128>(xi.den) * yi.den;
      if (den < limit && xi.total_l1 < limit && yi.term_l1_max < limit &&
          xi.total_l1 * yi.term_l1_max < limit / ctx.row_l1_max)
        return detail::mul_int64_path(x, y, xi, yi, static_cast<std::int64_t>(den));
    }
  }
  return mul_rational_path(x, y);
}

// x * x == x, exactly.
inline bool is_idempotent(const AlgebraElement& x) { return x * x == x; }

// Both products vanish.
inline bool are_orthogonal(const AlgebraElement& x, const AlgebraElement& y) {
  return (x * y).is_zero() && (y * x).is_zero();
}

// g * x == x * g for every group basis element g.  Multiplying by a basis
// element only permutes the support, so this is a pure bookkeeping check.
inline bool is_central(const AlgebraElement& x) {
  const GroupKind& k = x.kind();
  using Slot = std::pair<std::size_t, const Cyclotomic*>;
  std::vector<Slot> left, right;
  for (const GroupElem& g : enumerate(k)) {
    left.clear();
    right.clear();
    for (const auto& [h, c] : x.terms()) {
      left.emplace_back(k.index_of(g_mul(k, g, h)), &c);
      right.emplace_back(k.index_of(g_mul(k, h, g)), &c);
    }
    auto by_index = [](const Slot& a, const Slot& b) { return a.first < b.first; };
    std::sort(left.begin(), left.end(), by_index);
    std::sort(right.begin(), right.end(), by_index);
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i].first != right[i].first) return false;
      if (!(*left[i].second == *right[i].second)) return false;
    }
  }
  return true;
}

}  // namespace diquat
