#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "diquat/cyclotomic.hpp"
#include "diquat/rational.hpp"
#include "test_util.hpp"

using namespace diquat;
using testutil::close;

TEST_CASE("rational arithmetic is exact and canonical", "[rational]") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(1, 3) * Rational(3, 1) == Rational(1));
  CHECK(Rational(7, 5).inverse() == Rational(5, 7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational parsing round-trips", "[rational]") {
  CHECK(Rational::parse("5/6") == Rational(5, 6));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(Rational(22, 7).str()) == Rational(22, 7));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational values never overflow", "[rational]") {
  // (1/3)^50: denominator 3^50 does not fit any machine word.
  Rational x(1, 3);
  Rational p(1);
  for (int i = 0; i < 50; ++i) p *= x;
  Rational q(1);
  mpz_class d = 1;
  for (int i = 0; i < 50; ++i) d *= 3;
  CHECK(p == Rational(mpz_class(1), d));
  CHECK(p.num() == 1);
}

TEST_CASE("cyclotomic polynomials match the classical tables", "[cyclotomic]") {
  auto as_ints = [](const CycPoly& p) {
    std::vector<long> v;
    for (const auto& c : p) {
      REQUIRE(c.is_integer());
      v.push_back(c.num().get_si());
    }
    return v;
  };
  CHECK(as_ints(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
  CHECK(as_ints(cyclotomic_polynomial(2)) == std::vector<long>{1, 1});
  CHECK(as_ints(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
  CHECK(as_ints(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
  CHECK(as_ints(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
  CHECK(as_ints(cyclotomic_polynomial(8)) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(as_ints(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("degree of Phi_N equals the totient", "[cyclotomic]") {
  for (unsigned n = 1; n <= 128; ++n)
    CHECK(poly_degree(cyclotomic_polynomial(n)) == static_cast<int>(totient(n)));
}

TEST_CASE("product of Phi_d over divisors recovers x^N - 1", "[cyclotomic]") {
  for (unsigned n : {12u, 24u, 30u, 36u, 60u}) {
    CycPoly prod{Rational(1)};
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    CycPoly expect(n + 1);
    expect[0] = Rational(-1);
    expect[n] = Rational(1);
    CHECK(prod == expect);
  }
}

TEST_CASE("Phi_N vanishes at zeta_N", "[cyclotomic]") {
  for (unsigned n = 1; n <= 64; ++n) {
    const CycPoly& phi = cyclotomic_polynomial(n);
    Cyclotomic z = Cyclotomic::root(n, 1);
    // Horner evaluation in Q(zeta_N).
    Cyclotomic acc = Cyclotomic::zero(n);
    for (std::size_t i = phi.size(); i > 0; --i)
      acc = acc * z + Cyclotomic::constant(n, phi[i - 1]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("canonical reduction of root powers", "[cyclotomic]") {
  // zeta_3^2 reduces to -1 - zeta_3 mod Phi_3.
  Cyclotomic z = Cyclotomic::root(3, 2);
  CHECK(z.coeffs() == std::vector<Rational>{Rational(-1), Rational(-1)});
  // Exponents reduce mod N before anything else.
  CHECK(Cyclotomic::root(5, 7) == Cyclotomic::root(5, 2));
  CHECK(Cyclotomic::root(5, -1) == Cyclotomic::root(5, 4));
  // zeta_2 = -1, zeta_4^2 = -1.
  CHECK(Cyclotomic::root(2, 1) == Cyclotomic::constant(2, Rational(-1)));
  CHECK(Cyclotomic::root(4, 2) == Cyclotomic::constant(4, Rational(-1)));
}

TEST_CASE("field arithmetic in Q(zeta_4)", "[cyclotomic]") {
  Cyclotomic i = Cyclotomic::root(4, 1);
  Cyclotomic one = Cyclotomic::one(4);
  CHECK((one + i) * (one - i) == Cyclotomic::constant(4, Rational(2)));
  CHECK(i * i == -one);
  // (1 + i)^{-1} = (1 - i)/2.
  CHECK((one + i).inverse() == (one - i) * Rational(1, 2));
}

TEST_CASE("inverse in Q(zeta_3)", "[cyclotomic]") {
  Cyclotomic w = Cyclotomic::root(3, 1);
  Cyclotomic one = Cyclotomic::one(3);
  // (1 + zeta_3)^{-1} = -zeta_3 since 1 + zeta_3 = -zeta_3^2.
  CHECK((one + w).inverse() == -w);
  CHECK_THROWS_AS(Cyclotomic::zero(3).inverse(), std::domain_error);
}

TEST_CASE("random inverses certify against one", "[cyclotomic][property]") {
  std::mt19937 rng(20260815);
  for (unsigned order : {5u, 8u, 12u, 20u, 36u}) {
    for (int trial = 0; trial < 10; ++trial) {
      Cyclotomic x = testutil::random_cyclotomic(rng, order);
      if (x.is_zero()) continue;
      CHECK(x * x.inverse() == Cyclotomic::one(order));
    }
  }
}

TEST_CASE("order mismatch is rejected, not coerced", "[cyclotomic]") {
  Cyclotomic a = Cyclotomic::root(4, 1);
  Cyclotomic b = Cyclotomic::root(3, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  // Same value, different ambient field: not equal by definition.
  CHECK(Cyclotomic::one(3) != Cyclotomic::one(4));
}

TEST_CASE("lift embeds into larger fields", "[cyclotomic]") {
  CHECK(Cyclotomic::root(3, 1).lift(12) == Cyclotomic::root(12, 4));
  CHECK(Cyclotomic::root(4, 1).lift(12) == Cyclotomic::root(12, 3));
  CHECK_THROWS_AS(Cyclotomic::root(4, 1).lift(6), std::invalid_argument);

  std::mt19937 rng(7);
  for (auto [small, big] : std::vector<std::pair<unsigned, unsigned>>{
           {6, 12}, {5, 20}, {8, 24}, {12, 36}}) {
    for (int trial = 0; trial < 8; ++trial) {
      Cyclotomic x = testutil::random_cyclotomic(rng, small);
      Cyclotomic y = testutil::random_cyclotomic(rng, small);
      CHECK((x * y).lift(big) == x.lift(big) * y.lift(big));
      CHECK((x + y).lift(big) == x.lift(big) + y.lift(big));
      CHECK(close((x.lift(big)).to_complex(), x.to_complex()));
    }
  }
}

TEST_CASE("exact trig values at rational angles", "[cyclotomic][trig]") {
  CHECK(cos_pi_frac(1, 2).is_zero());           // cos(pi/2) = 0
  CHECK(sin_pi_frac(1, 2) == Cyclotomic::one(4));
  CHECK(cos_pi_frac(0, 1) == Cyclotomic::one(4));
  CHECK(cos_pi_frac(1, 1) == Cyclotomic::constant(4, Rational(-1)));
  CHECK(cos_pi_frac(1, 3).rational_value() == Rational(1, 2));
  CHECK(sin_pi_frac(1, 6).rational_value() == Rational(1, 2));
  CHECK(cos_pi_frac(2, 3).rational_value() == Rational(-1, 2));
  // Angles are taken mod 2*pi.
  CHECK(cos_pi_frac(9, 2) == cos_pi_frac(1, 2));
  CHECK(sin_pi_frac(-1, 2) == -sin_pi_frac(1, 2));
  // Field order is lcm(2q, 4).
  CHECK(cos_pi_frac(1, 5).order() == 20);
  CHECK(cos_pi_frac(1, 4).order() == 8);
}

TEST_CASE("cos^2 + sin^2 = 1 exactly", "[cyclotomic][trig][property]") {
  for (unsigned q = 1; q <= 30; ++q) {
    for (unsigned p = 0; p < 2 * q; ++p) {
      Cyclotomic c = cos_pi_frac(p, q), s = sin_pi_frac(p, q);
      CHECK(c * c + s * s == Cyclotomic::one(c.order()));
    }
  }
}

TEST_CASE("float embedding matches library trig", "[cyclotomic][float]") {
  constexpr double pi = 3.14159265358979323846;
  CHECK(close(cos_pi_frac(1, 5).to_complex(), {0.8090169944, 0.0}, 1e-9));
  Cyclotomic x = Cyclotomic::root(3, 1) + Cyclotomic::constant(3, Rational(-1));
  CHECK(close(x.to_complex(), {-1.5, 0.8660254038}, 1e-9));
  for (unsigned q = 1; q <= 30; ++q) {
    for (unsigned p = 0; p < 2 * q; ++p) {
      CHECK(close(cos_pi_frac(p, q).to_complex(), {std::cos(pi * p / q), 0.0}));
      CHECK(close(sin_pi_frac(p, q).to_complex(), {std::sin(pi * p / q), 0.0}));
    }
  }
}

TEST_CASE("conjugation is the order-reversing automorphism", "[cyclotomic]") {
  CHECK(Cyclotomic::root(5, 1).conj() == Cyclotomic::root(5, 4));
  CHECK(cos_pi_frac(2, 7).conj() == cos_pi_frac(2, 7));
  // Real values (cos and sin of real angles alike) are fixed points.
  CHECK(sin_pi_frac(2, 7).conj() == sin_pi_frac(2, 7));
  // Conjugation negates the imaginary unit.
  Cyclotomic i28 = imaginary_unit(28);
  CHECK((i28 * sin_pi_frac(2, 7)).conj() == -(i28 * sin_pi_frac(2, 7)));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Cyclotomic x = testutil::random_cyclotomic(rng, 12);
    Cyclotomic y = testutil::random_cyclotomic(rng, 12);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("field axioms hold on random samples", "[cyclotomic][property]") {
  std::mt19937 rng(99);
  for (unsigned order : {3u, 4u, 12u, 15u}) {
    for (int trial = 0; trial < 12; ++trial) {
      Cyclotomic x = testutil::random_cyclotomic(rng, order);
      Cyclotomic y = testutil::random_cyclotomic(rng, order);
      Cyclotomic z = testutil::random_cyclotomic(rng, order);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x + y == y + x);
      CHECK(x - x == Cyclotomic::zero(order));
    }
  }
}

TEST_CASE("float embedding is multiplicative", "[cyclotomic][float][property]") {
  std::mt19937 rng(123);
  for (unsigned order : {7u, 12u, 16u, 24u}) {
    for (int trial = 0; trial < 10; ++trial) {
      Cyclotomic x = testutil::random_cyclotomic(rng, order);
      Cyclotomic y = testutil::random_cyclotomic(rng, order);
      CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex(), 1e-9));
      CHECK(close((x + y).to_complex(), x.to_complex() + y.to_complex(), 1e-9));
    }
  }
}

TEST_CASE("dense coefficient views", "[cyclotomic]") {
  std::vector<Rational> c{Rational(1, 2), Rational(0), Rational(-3), Rational(0)};
  Cyclotomic x = Cyclotomic::from_coeffs(12, c);
  CHECK(x.coeffs() == c);
  CHECK_THROWS_AS(Cyclotomic::from_coeffs(12, {Rational(1)}), std::invalid_argument);
  CHECK(Cyclotomic::from_coeffs(12, std::vector<Rational>(4)).is_zero());
}

TEST_CASE("imaginary unit squares to minus one", "[cyclotomic]") {
  for (unsigned n : {4u, 8u, 12u, 20u}) {
    Cyclotomic i = imaginary_unit(n);
    CHECK(i * i == Cyclotomic::constant(n, Rational(-1)));
    CHECK(close(i.to_complex(), {0.0, 1.0}));
  }
  CHECK_THROWS_AS(imaginary_unit(6), std::invalid_argument);
}
