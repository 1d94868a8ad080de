#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "diquat/rational.hpp"

namespace diquat {

// Dense univariate polynomial over Rational, ascending degree. The zero
// polynomial is the empty vector (or all-zero; poly_trim canonicalizes).
using CycPoly = std::vector<Rational>;

inline void poly_trim(CycPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int poly_degree(const CycPoly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (!p[i - 1].is_zero()) return static_cast<int>(i - 1);
  return -1;
}

inline CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
  int da = poly_degree(a), db = poly_degree(b);
  if (da < 0 || db < 0) return {};
  CycPoly out(static_cast<std::size_t>(da + db) + 1);
  for (int i = 0; i <= da; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= db; ++j) out[i + j].add_mul(a[i], b[j]);
  }
  poly_trim(out);
  return out;
}

// Exact long division over Q: a = q*b + r with deg r < deg b.
inline std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& a, const CycPoly& b) {
  int db = poly_degree(b);
  if (db < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
  CycPoly r = a;
  poly_trim(r);
  int dr = poly_degree(r);
  if (dr < db) return {{}, r};
  CycPoly q(static_cast<std::size_t>(dr - db) + 1);
  Rational lead_inv = b[db].inverse();
  while ((dr = poly_degree(r)) >= db) {
    Rational c = r[dr] * lead_inv;
    int shift = dr - db;
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
  }
  poly_trim(r);
  poly_trim(q);
  return {q, r};
}

// Euler's totient by trial-division factorization (independent of the
// cyclotomic polynomial machinery; tests cross-check deg Phi_N == totient(N)).
inline unsigned totient(unsigned n) {
  if (n == 0) throw std::invalid_argument("totient: n must be positive");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Phi_N by the recursive quotient: (x^N - 1) / prod_{d | N, d < N} Phi_d.
// Memoized; coefficients are integers (stored as Rational).
inline const CycPoly& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, CycPoly> memo;
  static std::mutex mu;
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](auto&& self, unsigned k) -> const CycPoly& {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    CycPoly num(k + 1);
    num[0] = Rational(-1);
    num[k] = Rational(1);
    for (unsigned d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto [q, r] = poly_divmod(num, self(self, d));
      if (poly_degree(r) >= 0)
        throw std::logic_error("cyclotomic_polynomial: non-exact division");
      num = std::move(q);
    }
    return memo.emplace(k, std::move(num)).first->second;
  };
  return compute(compute, n);
}

namespace detail {

using SparseTerms = std::vector<std::pair<unsigned, Rational>>;

// Per-order immutable context: Phi_N plus a table reducing every monomial
// x^e with phi(N) <= e < N to its canonical residue. Multiplication then
// needs only exponent addition mod N and one table application per term,
// so sparse elements (roots of unity, cosines) never densify mid-product.
struct CycContext {
  unsigned order = 1;
  unsigned degree = 1;  // deg Phi_N = totient(N)
  CycPoly phi;
  std::vector<SparseTerms> redrow;  // redrow[e - degree] = x^e mod Phi_N

  // Integer mirror of redrow for overflow-checked int64 kernels.
  bool rows_fit_i64 = true;
  std::vector<std::vector<std::pair<unsigned, std::int64_t>>> redrow_i64;
  std::int64_t row_l1_max = 1;  // max over rows of sum |entry|, at least 1
};

inline const CycContext& cyc_context(unsigned n) {
  static std::map<unsigned, std::unique_ptr<const CycContext>> memo;
  static std::mutex mu;
  if (n == 0) throw std::invalid_argument("cyc_context: order must be positive");
  const CycPoly& phi = cyclotomic_polynomial(n);  // takes its own lock first
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return *it->second;

  auto ctx = std::make_unique<CycContext>();
  ctx->order = n;
  ctx->phi = phi;
  ctx->degree = static_cast<unsigned>(poly_degree(phi));
  unsigned deg = ctx->degree;

  // Row for x^deg is -(Phi_N - x^deg); successive rows shift by one and
  // fold the overflowing coefficient back through the first row.
  std::vector<CycPoly> dense_rows;
  if (n > deg) {
    CycPoly base(deg);
    for (unsigned i = 0; i < deg; ++i) base[i] = -phi[i];
    dense_rows.push_back(base);
    for (unsigned e = deg + 1; e < n; ++e) {
      const CycPoly& prev = dense_rows.back();
      CycPoly cur(deg);
      Rational overflow = prev[deg - 1];
      for (unsigned i = deg - 1; i > 0; --i) cur[i] = prev[i - 1];
      cur[0] = Rational(0);
      if (!overflow.is_zero())
        for (unsigned i = 0; i < deg; ++i) cur[i].add_mul(overflow, base[i]);
      dense_rows.push_back(std::move(cur));
    }
  }
  for (const CycPoly& row : dense_rows) {
    SparseTerms sparse;
    std::vector<std::pair<unsigned, std::int64_t>> sparse_i64;
    std::int64_t l1 = 0;
    bool fits = ctx->rows_fit_i64;
    for (unsigned i = 0; i < row.size(); ++i) {
      if (row[i].is_zero()) continue;
      sparse.emplace_back(i, row[i]);
      if (fits && row[i].is_integer() && row[i].num().fits_slong_p()) {
        std::int64_t v = row[i].num().get_si();
        sparse_i64.emplace_back(i, v);
        l1 += (v < 0 ? -v : v);
      } else {
        fits = false;
      }
    }
    ctx->rows_fit_i64 = fits;
    ctx->redrow.push_back(std::move(sparse));
    ctx->redrow_i64.push_back(std::move(sparse_i64));
    if (fits) ctx->row_l1_max = std::max(ctx->row_l1_max, l1);
  }
  return *memo.emplace(n, std::move(ctx)).first->second;
}

// Dense exponent-indexed accumulator reused across calls (thread-local per
// order). Callers add raw contributions at exponents already reduced mod N;
// finish() folds exponents >= phi(N) through the reduction table, collects
// the sorted nonzero support, and leaves the scratch clean for reuse.
struct CycScratch {
  const CycContext* ctx;
  std::vector<Rational> acc;
  std::vector<unsigned> touched;
  std::vector<char> mark;

  explicit CycScratch(const CycContext& c)
      : ctx(&c), acc(c.order), mark(c.order, 0) {}

  void add(unsigned e, const Rational& v) {
    if (!mark[e]) {
      mark[e] = 1;
      touched.push_back(e);
    }
    acc[e] += v;
  }

  void add_mul(unsigned e, const Rational& a, const Rational& b) {
    if (!mark[e]) {
      mark[e] = 1;
      touched.push_back(e);
    }
    acc[e].add_mul(a, b);
  }

  SparseTerms finish() {
    unsigned deg = ctx->degree;
    // High exponents first: their rows contribute only below deg.
    for (std::size_t i = 0; i < touched.size(); ++i) {
      unsigned e = touched[i];
      if (e < deg || acc[e].is_zero()) continue;
      Rational c = std::move(acc[e]);
      acc[e] = Rational(0);
      for (const auto& [d, t] : ctx->redrow[e - deg]) add_mul(d, c, t);
    }
    SparseTerms out;
    std::sort(touched.begin(), touched.end());
    for (unsigned e : touched) {
      if (e < deg && !acc[e].is_zero()) out.emplace_back(e, std::move(acc[e]));
      acc[e] = Rational(0);
      mark[e] = 0;
    }
    touched.clear();
    return out;
  }
};

inline CycScratch& scratch_for(const CycContext& ctx) {
  thread_local std::vector<std::unique_ptr<CycScratch>> cache;
  for (auto& s : cache)
    if (s->ctx == &ctx) return *s;
  cache.push_back(std::make_unique<CycScratch>(ctx));
  return *cache.back();
}

// Adds the product of two canonical term lists into the scratch.  High
// exponents are left unfolded: finish() folds each distinct one through the
// reduction table once, instead of once per contributing term pair.
inline void accumulate_product(CycScratch& scratch, const CycContext& ctx,
                               const SparseTerms& a, const SparseTerms& b) {
  unsigned n = ctx.order;
  for (const auto& [e1, c1] : a) {
    for (const auto& [e2, c2] : b) {
      unsigned e = e1 + e2;
      if (e >= n) e -= n;
      scratch.add_mul(e, c1, c2);
    }
  }
}

struct I64Scratch {
  const CycContext* ctx;
  std::vector<std::int64_t> acc;
  std::vector<unsigned> touched;
  std::vector<char> mark;
  std::vector<std::pair<unsigned, std::int64_t>> lhs, rhs;

  explicit I64Scratch(const CycContext& c)
      : ctx(&c), acc(c.order, 0), mark(c.order, 0) {}
};

inline I64Scratch& i64_scratch_for(const CycContext& ctx) {
  thread_local std::vector<std::unique_ptr<I64Scratch>> cache;
  for (auto& s : cache)
    if (s->ctx == &ctx) return *s;
  cache.push_back(std::make_unique<I64Scratch>(ctx));
  return *cache.back();
}

// Integer fast path for operator*.  Succeeds only when both operands have
// integer coefficients small enough that every intermediate value provably
// fits in int64 (bound: conv L1 <= l1(a)*l1(b), and each accumulator entry
// stays within that times 1 + row_l1_max after folding); otherwise returns
// false with `out` untouched and the caller takes the rational path.
inline bool mul_terms_i64(const CycContext& ctx, const SparseTerms& a,
                          const SparseTerms& b, SparseTerms& out) {
  if (!ctx.rows_fit_i64) return false;
  I64Scratch& s = i64_scratch_for(ctx);
  auto scan = [](const SparseTerms& t,
                 std::vector<std::pair<unsigned, std::int64_t>>& flat,
                 std::int64_t& l1) {
    flat.clear();
    l1 = 0;
    constexpr std::int64_t cap = std::int64_t{1} << 31;
    for (const auto& [e, c] : t) {
      if (!c.is_integer() || !c.num().fits_slong_p()) return false;
      std::int64_t v = c.num().get_si();
      l1 += (v < 0 ? -v : v);
      if (l1 >= cap) return false;
      flat.emplace_back(e, v);
    }
    return true;
  };
  std::int64_t l1a, l1b;
  if (!scan(a, s.lhs, l1a) || !scan(b, s.rhs, l1b)) return false;
  if (l1a * l1b > (std::int64_t{1} << 61) / ctx.row_l1_max) return false;

  unsigned n = ctx.order, deg = ctx.degree;
  for (const auto& [e1, v1] : s.lhs)
    for (const auto& [e2, v2] : s.rhs) {
      unsigned e = e1 + e2;
      if (e >= n) e -= n;
      if (!s.mark[e]) {
        s.mark[e] = 1;
        s.touched.push_back(e);
      }
      s.acc[e] += v1 * v2;
    }
  for (std::size_t i = 0; i < s.touched.size(); ++i) {
    unsigned e = s.touched[i];
    if (e < deg || s.acc[e] == 0) continue;
    std::int64_t c = s.acc[e];
    s.acc[e] = 0;
    for (const auto& [d, t] : ctx.redrow_i64[e - deg]) {
      if (!s.mark[d]) {
        s.mark[d] = 1;
        s.touched.push_back(d);
      }
      s.acc[d] += c * t;
    }
  }
  out.clear();
  std::sort(s.touched.begin(), s.touched.end());
  for (unsigned e : s.touched) {
    if (e < deg && s.acc[e] != 0)
      out.emplace_back(e, Rational(static_cast<long>(s.acc[e])));
    s.acc[e] = 0;
    s.mark[e] = 0;
  }
  s.touched.clear();
  return true;
}

}  // namespace detail

// Element of the cyclotomic field Q(zeta_N). Canonical at rest: the stored
// support is the residue mod Phi_N (all exponents < totient(N), no zero
// coefficients, sorted), so equality is plain representation equality.
// Binary operations require matching orders; callers lift explicitly.
class Cyclotomic {
 public:
  Cyclotomic() : ctx_(&detail::cyc_context(1)) {}

  static Cyclotomic zero(unsigned n) { return Cyclotomic(detail::cyc_context(n)); }

  static Cyclotomic one(unsigned n) { return constant(n, Rational(1)); }

  static Cyclotomic constant(unsigned n, const Rational& c) {
    Cyclotomic x(detail::cyc_context(n));
    if (!c.is_zero()) x.terms_.emplace_back(0, c);
    return x;
  }

  // zeta_N^k (k may be any integer; reduced mod N, then mod Phi_N).
  static Cyclotomic root(unsigned n, long long k) {
    const auto& ctx = detail::cyc_context(n);
    long long e = k % static_cast<long long>(n);
    if (e < 0) e += n;
    auto& scratch = detail::scratch_for(ctx);
    scratch.add(static_cast<unsigned>(e), Rational(1));
    Cyclotomic x(ctx);
    x.terms_ = scratch.finish();
    return x;
  }

  // Dense coefficient vector of length totient(N), ascending degree.
  static Cyclotomic from_coeffs(unsigned n, const std::vector<Rational>& coeffs) {
    const auto& ctx = detail::cyc_context(n);
    if (coeffs.size() != ctx.degree)
      throw std::invalid_argument("Cyclotomic::from_coeffs: expected " +
                                  std::to_string(ctx.degree) + " coefficients");
    Cyclotomic x(ctx);
    for (unsigned i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) x.terms_.emplace_back(i, coeffs[i]);
    return x;
  }

  // Terms must already be canonical (sorted, exponents < totient(N), nonzero),
  // e.g. the output of CycScratch::finish.
  static Cyclotomic from_reduced_terms(unsigned n, detail::SparseTerms terms) {
    Cyclotomic x(detail::cyc_context(n));
    x.terms_ = std::move(terms);
    return x;
  }

  // Reduces an arbitrary-degree polynomial in zeta_N.
  static Cyclotomic from_poly(unsigned n, const CycPoly& p) {
    const auto& ctx = detail::cyc_context(n);
    auto& scratch = detail::scratch_for(ctx);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!p[i].is_zero()) scratch.add(static_cast<unsigned>(i % ctx.order), p[i]);
    Cyclotomic x(ctx);
    x.terms_ = scratch.finish();
    return x;
  }

  unsigned order() const { return ctx_->order; }
  unsigned degree() const { return ctx_->degree; }
  const detail::SparseTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  Rational rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational())
      throw std::domain_error("Cyclotomic: not a rational value");
    return terms_[0].second;
  }

  std::vector<Rational> coeffs() const {
    std::vector<Rational> out(ctx_->degree);
    for (const auto& [e, c] : terms_) out[e] = c;
    return out;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic operator-() const {
    Cyclotomic out(*ctx_);
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, -c);
    return out;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_order(b, "+");
    Cyclotomic out(*a.ctx_);
    out.terms_ = merge_terms(a.terms_, b.terms_, false);
    return out;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_order(b, "-");
    Cyclotomic out(*a.ctx_);
    out.terms_ = merge_terms(a.terms_, b.terms_, true);
    return out;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same_order(b, "*");
    Cyclotomic out(*a.ctx_);
    if (a.is_zero() || b.is_zero()) return out;
    if (detail::mul_terms_i64(*a.ctx_, a.terms_, b.terms_, out.terms_)) return out;
    auto& scratch = detail::scratch_for(*a.ctx_);
    detail::accumulate_product(scratch, *a.ctx_, a.terms_, b.terms_);
    out.terms_ = scratch.finish();
    return out;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
    Cyclotomic out(*a.ctx_);
    if (s.is_zero()) return out;
    out.terms_.reserve(a.terms_.size());
    for (const auto& [e, c] : a.terms_) out.terms_.emplace_back(e, c * s);
    return out;
  }
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Multiplicative inverse via the extended Euclidean algorithm against
  // Phi_N. Remainders are normalized monic each step to keep coefficient
  // growth polynomial; Phi_N is irreducible over Q so the gcd of any
  // nonzero residue with it is 1. The result is re-checked by one exact
  // multiplication before returning.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    CycPoly r0 = ctx_->phi, r1 = to_poly();
    CycPoly s0, s1{Rational(1)};
    while (poly_degree(r1) >= 0) {
      auto [q, r2] = poly_divmod(r0, r1);
      CycPoly qs = poly_mul(q, s1);
      CycPoly s2 = s0;
      s2.resize(std::max(s2.size(), qs.size()));
      for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      poly_trim(s2);
      int d = poly_degree(r2);
      if (d >= 0) {
        Rational lead_inv = r2[d].inverse();
        for (auto& c : r2) c *= lead_inv;
        for (auto& c : s2) c *= lead_inv;
      }
      r0 = std::move(r1);
      s0 = std::move(s1);
      r1 = std::move(r2);
      s1 = std::move(s2);
    }
    if (poly_degree(r0) != 0)
      throw std::logic_error("Cyclotomic: nontrivial gcd with irreducible Phi_N");
    Cyclotomic inv = from_poly(order(), s0) * r0[0].inverse();
    if (!(*this * inv == one(order())))
      throw std::logic_error("Cyclotomic: inverse self-check failed");
    return inv;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  // Complex conjugation: zeta |-> zeta^{-1}.
  Cyclotomic conj() const {
    auto& scratch = detail::scratch_for(*ctx_);
    unsigned n = ctx_->order;
    for (const auto& [e, c] : terms_) scratch.add(e == 0 ? 0 : n - e, c);
    Cyclotomic out(*ctx_);
    out.terms_ = scratch.finish();
    return out;
  }

  // Embedding Q(zeta_N) -> Q(zeta_M) by zeta_N |-> zeta_M^{M/N}; needs N | M.
  Cyclotomic lift(unsigned m) const {
    unsigned n = ctx_->order;
    if (m % n != 0)
      throw std::invalid_argument("Cyclotomic::lift: target order not a multiple");
    if (m == n) return *this;
    const auto& ctx = detail::cyc_context(m);
    unsigned k = m / n;
    auto& scratch = detail::scratch_for(ctx);
    for (const auto& [e, c] : terms_)
      scratch.add(static_cast<unsigned>((static_cast<unsigned long long>(e) * k) % m), c);
    Cyclotomic out(ctx);
    out.terms_ = scratch.finish();
    return out;
  }

  // Plain-text polynomial in z = zeta_N, e.g. "-1/2 + z12^3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      bool neg = c.sign() < 0;
      std::string mag = (neg ? (-c) : c).str();
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (e == 0) {
        out += mag;
        continue;
      }
      if (mag != "1") out += mag + "*";
      out += "z" + std::to_string(ctx_->order);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  std::complex<double> to_complex() const {
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::complex<double> z(0.0, 0.0);
    for (const auto& [e, c] : terms_)
      z += c.to_double() * std::polar(1.0, two_pi * e / ctx_->order);
    return z;
  }

 private:
  explicit Cyclotomic(const detail::CycContext& ctx) : ctx_(&ctx) {}

  void check_same_order(const Cyclotomic& o, const char* op) const {
    if (ctx_ != o.ctx_)
      throw std::invalid_argument(std::string("Cyclotomic: order mismatch in '") + op +
                                  "' (" + std::to_string(order()) + " vs " +
                                  std::to_string(o.order()) + "); lift first");
  }

  CycPoly to_poly() const {
    CycPoly p;
    if (!terms_.empty()) {
      p.resize(terms_.back().first + 1);
      for (const auto& [e, c] : terms_) p[e] = c;
    }
    return p;
  }

  static detail::SparseTerms merge_terms(const detail::SparseTerms& a,
                                         const detail::SparseTerms& b, bool subtract) {
    detail::SparseTerms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
        ++j;
      } else {
        Rational c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
        if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  const detail::CycContext* ctx_;
  detail::SparseTerms terms_;
};

// lcm helper for choosing common cyclotomic orders.
inline unsigned order_lcm(unsigned a, unsigned b) {
  return static_cast<unsigned>(std::lcm(a, b));
}

// Exact cos(p*pi/q) as an element of Q(zeta_{lcm(2q,4)}).
inline Cyclotomic cos_pi_frac(long long p, unsigned q) {
  if (q == 0) throw std::invalid_argument("cos_pi_frac: q must be positive");
  unsigned n = order_lcm(2 * q, 4);
  long long period = 2 * static_cast<long long>(q);
  long long pm = p % period;
  if (pm < 0) pm += period;
  long long a = pm * (n / (2 * q));
  Cyclotomic s = Cyclotomic::root(n, a) + Cyclotomic::root(n, -a);
  return s * Rational(1, 2);
}

// Exact sin(p*pi/q) in the same field: (zeta^a - zeta^{-a}) / (2i).
inline Cyclotomic sin_pi_frac(long long p, unsigned q) {
  if (q == 0) throw std::invalid_argument("sin_pi_frac: q must be positive");
  unsigned n = order_lcm(2 * q, 4);
  long long period = 2 * static_cast<long long>(q);
  long long pm = p % period;
  if (pm < 0) pm += period;
  long long a = pm * (n / (2 * q));
  Cyclotomic diff = Cyclotomic::root(n, a) - Cyclotomic::root(n, -a);
  Cyclotomic inv_i = Cyclotomic::root(n, 3 * (static_cast<long long>(n) / 4));
  return diff * inv_i * Rational(1, 2);
}

// The imaginary unit at order N (requires 4 | N).
inline Cyclotomic imaginary_unit(unsigned n) {
  if (n % 4 != 0) throw std::invalid_argument("imaginary_unit: order must be divisible by 4");
  return Cyclotomic::root(n, n / 4);
}

}  // namespace diquat
