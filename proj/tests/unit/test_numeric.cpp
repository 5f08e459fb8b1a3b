#include <gtest/gtest.h>

#include <array>
#include <mpfr.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "plrot/error.hpp"
#include "plrot/field.hpp"
#include "plrot/literal.hpp"

using namespace plrot;
using oracle::Q2;

namespace {

const FieldContext Q;
const FieldContext R5(5);

FieldElement lit(const char* s, const FieldContext& c = R5) { return parse_number(s, c); }

FieldElement random_element(gen::Rng& rng, const FieldContext& c) {
  auto r = [&] { return Rational(gen::uniform(rng, -40, 40), gen::uniform(rng, 1, 12)); };
  return FieldElement(c, r(), c.is_rational() ? Rational(0) : r());
}

}  // namespace

TEST(Rational, ArithmeticMatchesMpq) {
  gen::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    // mix machine-size and overflowing values
    std::int64_t big = i % 3 == 0 ? (std::int64_t{1} << 50) : 1;
    Rational x(gen::uniform(rng, -1000, 1000) * big, gen::uniform(rng, 1, 1000));
    Rational y(gen::uniform(rng, -1000, 1000), gen::uniform(rng, 1, 1000) * big);
    mpq_class a = x.to_mpq(), b = y.to_mpq();
    EXPECT_EQ((x + y).to_mpq(), mpq_class(a + b));
    EXPECT_EQ((x - y).to_mpq(), mpq_class(a - b));
    EXPECT_EQ((x * y).to_mpq(), mpq_class(a * b));
    if (!y.is_zero()) {
      EXPECT_EQ((x / y).to_mpq(), mpq_class(a / b));
    }
    EXPECT_EQ(x < y, a < b);
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
}

TEST(QfArith, TauSquaredIsTauPlusOne) {
  FieldElement t = FieldElement::tau();
  FieldElement t2 = qf_arith(t, t, Op::Mul);
  EXPECT_EQ(t2, t + FieldElement(R5, 1));
  // ((1 + sqrt 5)/2)^2 = (3 + sqrt 5)/2
  EXPECT_EQ(t2.rational_part(), Rational(3, 2));
  EXPECT_EQ(t2.irrational_part(), Rational(1, 2));
}

TEST(QfArith, MultiplicativeIdentity) {
  gen::Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    FieldElement x = random_element(rng, R5);
    EXPECT_EQ(qf_arith(x, FieldElement(R5, 1), Op::Mul), x);
  }
}

TEST(QfArith, TauRatioFromTranslations) {
  FieldElement t = FieldElement::tau();
  FieldElement lhs = qf_arith(t.pow(-2) - t.pow(-3), t.pow(-2) - t.pow(-4), Op::Div);
  EXPECT_EQ(lhs, t.pow(-1));
}

TEST(QfArith, Errors) {
  EXPECT_THROW(qf_arith(lit("1"), lit("0"), Op::Div), DivisionByZero);
  EXPECT_THROW(qf_arith(lit("sqrt(5)"), parse_number("sqrt(2)", FieldContext(2)), Op::Add), ContextMismatch);
}

TEST(QfArith, AgreesWithOracle) {
  gen::Rng rng(13);
  for (std::int64_t d : {2, 3, 5, 7}) {
    FieldContext c(d);
    for (int i = 0; i < 200; ++i) {
      FieldElement x = random_element(rng, c), y = random_element(rng, c);
      Q2 a = Q2::of(x), b = Q2::of(y);
      EXPECT_TRUE(oracle::same(a + b, x + y));
      EXPECT_TRUE(oracle::same(a - b, x - y));
      EXPECT_TRUE(oracle::same(a * b, x * y));
      if (!y.is_zero()) {
        EXPECT_TRUE(oracle::same(a / b, x / y));
      }
    }
  }
}

TEST(QfSign, Examples) {
  EXPECT_EQ(qf_sign(FieldElement::tau().pow(-1) - FieldElement(R5, 1)), -1);
  EXPECT_EQ(qf_sign(FieldElement(R5, 0)), 0);
  // (3 - sqrt 5)/2 > 0 since 9 > 5
  FieldElement x(R5, Rational(3, 2), Rational(-1, 2));
  EXPECT_EQ(qf_sign(x), 1);
  EXPECT_GT(9, 5);
}

TEST(QfIsRational, Examples) {
  EXPECT_FALSE(qf_is_rational(FieldElement::tau().pow(-1)));
  EXPECT_TRUE(qf_is_rational(FieldElement(R5, Rational(7, 3))));
  EXPECT_TRUE(qf_is_rational(lit("(1+sqrt(5))/2 - sqrt(5)/2")));
  EXPECT_EQ(lit("(1+sqrt(5))/2 - sqrt(5)/2"), FieldElement(R5, Rational(1, 2)));
}

TEST(FieldProperties, Axioms) {
  gen::Rng rng(14);
  for (std::int64_t d : {1, 2, 5}) {
    FieldContext c(d);
    for (int i = 0; i < 300; ++i) {
      FieldElement x = random_element(rng, c), y = random_element(rng, c), z = random_element(rng, c);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + (-x), FieldElement(c, 0));
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.reciprocal(), FieldElement(c, 1));
      }
      EXPECT_EQ(qf_sign(x * y), qf_sign(x) * qf_sign(y));
    }
  }
}

TEST(FieldProperties, SignAgreesWithHighPrecision) {
  gen::Rng rng(15);
  mpfr_t v, r;
  mpfr_inits2(400, v, r, static_cast<mpfr_ptr>(nullptr));  // ~120 decimal digits
  for (int i = 0; i < 10'000; ++i) {
    std::int64_t d = std::array<std::int64_t, 4>{2, 3, 5, 7}[i % 4];
    FieldContext c(d);
    Rational bq(gen::uniform(rng, -1000, 1000), gen::uniform(rng, 1, 1000));
    Rational aq(gen::uniform(rng, -1000, 1000), gen::uniform(rng, 1, 1000));
    if (i % 2) {
      // a = -b sqrt(d) truncated to 12 digits: |x| is tiny
      mpfr_set_si(r, d, MPFR_RNDN);
      mpfr_sqrt(r, r, MPFR_RNDN);
      mpq_class bm = bq.to_mpq();
      mpfr_mul_q(r, r, bm.get_mpq_t(), MPFR_RNDN);
      mpfr_mul_ui(r, r, 1'000'000'000'000UL, MPFR_RNDN);
      mpz_class z;
      mpfr_get_z(z.get_mpz_t(), r, MPFR_RNDD);
      aq = Rational(mpq_class(-z, mpz_class(1'000'000'000'000UL)));
    }
    FieldElement x(c, aq, bq);
    mpfr_set_si(r, d, MPFR_RNDN);
    mpfr_sqrt(r, r, MPFR_RNDN);
    mpq_class b = x.irrational_part().to_mpq();
    mpfr_mul_q(r, r, b.get_mpq_t(), MPFR_RNDN);
    mpq_class a = x.rational_part().to_mpq();
    mpfr_set_q(v, a.get_mpq_t(), MPFR_RNDN);
    mpfr_add(v, v, r, MPFR_RNDN);
    int s = mpfr_sgn(v);
    EXPECT_EQ(qf_sign(x), s > 0 ? 1 : (s < 0 ? -1 : 0)) << format_number(x);
  }
  mpfr_clears(v, r, static_cast<mpfr_ptr>(nullptr));
}

TEST(MulDependence, Examples) {
  EXPECT_FALSE(mul_dependence(2, 3).dependent);
  auto half = mul_dependence(2, 4);
  ASSERT_TRUE(half.dependent);
  EXPECT_EQ(half.ratio, Rational(1, 2));
  auto r = mul_dependence(8, 4);
  ASSERT_TRUE(r.dependent);
  EXPECT_EQ(r.ratio, Rational(3, 2));
  // brute force: 4^3 == 8^2
  EXPECT_EQ(4 * 4 * 4, 8 * 8);
  EXPECT_THROW(mul_dependence(2, 1), DomainError);
}

TEST(MulDependence, RatioSatisfiesPowerIdentity) {
  gen::Rng rng(16);
  for (int i = 0; i < 300; ++i) {
    // build dependent pairs from a common base, plus unrelated ones
    Rational base(gen::uniform(rng, 2, 12), gen::uniform(rng, 1, 5));
    if (base == Rational(1)) continue;
    long m = gen::uniform(rng, 1, 6), n = gen::uniform(rng, 1, 6);
    Rational a = i % 4 == 0 ? Rational(gen::uniform(rng, 2, 50)) : base.pow(m);
    Rational b = base.pow(n);
    auto dec = mul_dependence(a, b);
    if (!dec.dependent) continue;
    // log_b(a) = p/q  =>  a^q == b^p
    long p = dec.ratio.numerator().get_si(), q = dec.ratio.denominator().get_si();
    EXPECT_EQ(a.pow(q), b.pow(p));
  }
}

TEST(MulDependence, FactorBoundIsAnError) {
  // a product of two primes above the bound
  Rational big(std::int64_t{1'000'003} * 1'000'033);
  EXPECT_THROW(mul_dependence(big, 2, 1000), ResourceLimit);
}

TEST(LogRatio, QuadraticUnits) {
  FieldElement t = FieldElement::tau();
  auto r = log_ratio(t.pow(2), t.pow(3));
  ASSERT_TRUE(r.dependent);
  EXPECT_EQ(r.ratio, Rational(2, 3));
  EXPECT_FALSE(log_ratio(t, FieldElement(R5, 2)).dependent);
}

TEST(RingMember, Examples) {
  EXPECT_TRUE(ring_member(FieldElement(Q, Rational(3, 4)), RingSpec::dyadic(), RingRole::Breakpoint));
  EXPECT_FALSE(ring_member(FieldElement(Q, Rational(1, 3)), RingSpec::dyadic(), RingRole::Breakpoint));
  EXPECT_TRUE(ring_member(FieldElement(Q, Rational(4)), RingSpec::dyadic(), RingRole::Slope));
  EXPECT_FALSE(ring_member(FieldElement(Q, Rational(3)), RingSpec::dyadic(), RingRole::Slope));
  EXPECT_TRUE(ring_member(FieldElement::tau().pow(-3), RingSpec::golden(), RingRole::Breakpoint));
  EXPECT_TRUE(ring_member(FieldElement::tau().pow(-3), RingSpec::golden(), RingRole::Slope));
  EXPECT_FALSE(ring_member(FieldElement(R5, 2), RingSpec::golden(), RingRole::Slope));
  // 6 = 2 * 3
  EXPECT_TRUE(ring_member(FieldElement(Q, Rational(5, 6)), RingSpec::stein(2, 3), RingRole::Breakpoint));
  EXPECT_FALSE(ring_member(FieldElement(Q, Rational(1, 5)), RingSpec::stein(2, 3), RingRole::Breakpoint));
  EXPECT_TRUE(ring_member(FieldElement(Q, Rational(2, 9)), RingSpec::stein(2, 3), RingRole::Slope));
  EXPECT_THROW(RingSpec::stein(2, 4), DomainError);
  EXPECT_THROW(RingSpec::stein(3, 2), DomainError);
}

TEST(Literal, ParseForms) {
  EXPECT_EQ(lit("tau^-3"), FieldElement::tau().pow(-3));
  EXPECT_EQ(lit("(1+sqrt(5))/2"), FieldElement::tau());
  FieldContext r2(2);
  EXPECT_EQ(parse_number("1 - sqrt(2)/2", r2), FieldElement(r2, 1, Rational(-1, 2)));
  EXPECT_EQ(parse_number("sqrt(8)", r2), FieldElement(r2, 0, 2));
  EXPECT_EQ(parse_number("sqrt(4)", Q), FieldElement(Q, 2));
  EXPECT_THROW(parse_number("tau", Q), Error);
  EXPECT_THROW(parse_number("sqrt(3)", R5), Error);
  EXPECT_THROW(parse_number("1/", Q), ParseError);
}

TEST(Literal, RoundTrip) {
  gen::Rng rng(17);
  for (std::int64_t d : {1, 2, 5}) {
    FieldContext c(d);
    for (int i = 0; i < 200; ++i) {
      FieldElement x = random_element(rng, c);
      EXPECT_EQ(parse_number(format_number(x), c), x) << format_number(x);
    }
  }
  for (long k = -8; k <= 8; ++k) {
    FieldElement t = FieldElement::tau().pow(k);
    EXPECT_EQ(parse_number(format_number(t), R5), t);
  }
}

TEST(Decimal, FortyDigits) {
  // (3 - sqrt 5)/2 to 40 significant digits
  EXPECT_EQ(FieldElement::tau().pow(-2).to_decimal(40), "0.3819660112501051517954131656343618822797");
  EXPECT_EQ(FieldElement(Q, Rational(1, 3)).to_decimal(5), "0.33333");
}
