#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "plrot/rational.hpp"

namespace plrot {

/// A real quadratic field Q(sqrt(d)) with d square-free; d == 1 is plain Q.
class FieldContext {
 public:
  FieldContext() = default;
  explicit FieldContext(std::int64_t d);

  static FieldContext rationals() { return FieldContext(); }
  /// Q(sqrt(5)), home of the golden ratio.
  static FieldContext golden() { return FieldContext(5); }

  std::int64_t d() const noexcept { return d_; }
  bool is_rational() const noexcept { return d_ == 1; }
  std::string to_string() const;

  friend bool operator==(const FieldContext&, const FieldContext&) = default;

 private:
  std::int64_t d_ = 1;
};

/// Exact real number a + b*sqrt(d). Every constructor canonicalizes, so two
/// elements are equal iff they represent the same real number.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldContext ctx, Rational a, Rational b = Rational());

  /// Rational number in Q.
  static FieldElement rational(Rational a) { return FieldElement(FieldContext(), std::move(a)); }
  /// tau = (1 + sqrt 5) / 2, in Q(sqrt 5).
  static FieldElement tau();
  /// sqrt(d) of the given context (1 in Q).
  static FieldElement sqrt_d(FieldContext ctx);

  const FieldContext& context() const noexcept { return ctx_; }
  const Rational& rational_part() const noexcept { return a_; }
  const Rational& irrational_part() const noexcept { return b_; }

  int sign() const;
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  FieldElement conjugate() const;
  /// Field norm a^2 - d b^2.
  Rational norm() const;
  FieldElement reciprocal() const;
  FieldElement pow(long exponent) const;
  FieldElement abs() const { return sign() < 0 ? -*this : *this; }

  /// Same number viewed in another field; only rational values may move.
  FieldElement in_context(FieldContext ctx) const;

  /// Largest integer <= this, decided exactly.
  mpz_class floor() const;
  double approx() const;
  /// Decimal expansion with `digits` significant digits, round-half-even.
  std::string to_decimal(int digits = 40) const;
  /// Size measure used by resource guards.
  std::size_t bit_size() const { return a_.bit_size() + b_.bit_size(); }

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y);
  friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y);

 private:
  FieldContext ctx_;
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

enum class Op { Add, Sub, Mul, Div };
/// Exact field arithmetic; throws ContextMismatch or DivisionByZero.
FieldElement qf_arith(const FieldElement& x, const FieldElement& y, Op op);
/// Exact sign of the real number x.
int qf_sign(const FieldElement& x);
/// True iff x is rational (b == 0 after canonicalization).
bool qf_is_rational(const FieldElement& x);

// ---------------------------------------------------------------------------
// Multiplicative dependence.

/// Either log_b(a) = m/n exactly, or a and b are multiplicatively independent.
struct LogRatioDecision {
  bool dependent = false;
  Rational ratio;  // m/n when dependent
};

/// Default trial-division bound for factorizations.
inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

/// Decides whether log_b(a) is rational for positive rationals a, b != 1.
/// Throws ResourceLimit if a numerator/denominator cannot be fully factored
/// with primes up to `factor_bound`.
LogRatioDecision mul_dependence(const Rational& a, const Rational& b,
                                std::uint64_t factor_bound = kDefaultFactorBound);

/// Same decision for positive elements of a real quadratic field (b != 1).
LogRatioDecision log_ratio(const FieldElement& a, const FieldElement& b,
                           std::uint64_t factor_bound = kDefaultFactorBound);

/// If x == tau^k for some |k| <= max_exponent returns k (x must live in Q(sqrt 5)).
std::optional<long> tau_exponent(const FieldElement& x, long max_exponent = 256);

// ---------------------------------------------------------------------------
// Coefficient rings of the named groups.

class RingSpec {
 public:
  enum class Kind { Dyadic, Golden, Stein, AllRationals, AllField };

  static RingSpec dyadic() { return RingSpec(Kind::Dyadic); }
  static RingSpec golden() { return RingSpec(Kind::Golden); }
  static RingSpec stein(std::int64_t p, std::int64_t q);
  static RingSpec all_rationals() { return RingSpec(Kind::AllRationals); }
  static RingSpec all_field() { return RingSpec(Kind::AllField); }

  Kind kind() const noexcept { return kind_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  explicit RingSpec(Kind k) : kind_(k) {}
  Kind kind_;
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
};

enum class RingRole { Breakpoint, Slope };

/// Exact membership of x as a breakpoint coordinate or as a slope.
bool ring_member(const FieldElement& x, const RingSpec& spec, RingRole role);

}  // namespace plrot
