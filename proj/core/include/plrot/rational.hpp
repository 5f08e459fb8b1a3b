#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plrot {

// Arbitrary-precision rational number.
//
// Values whose numerator and denominator fit in a signed 64-bit word are
// kept inline and handled with 128-bit intermediate arithmetic; anything
// larger is promoted to a shared, immutable GMP rational and demoted again
// as soon as a result fits. The representation is always canonical:
// gcd(num, den) == 1 and den > 0, so structural equality is value equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpz_class& n);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "-p" or "p/q" (decimal integers, q != 0).
  static Rational parse(std::string_view text);

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_small() const noexcept { return !big_; }

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(long exponent) const;
  mpz_class floor() const;
  mpz_class ceil() const;

  /// Number of bits in numerator plus denominator; a size measure.
  std::size_t bit_size() const;

  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y);
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  static Rational from_mpq(mpq_class q);
  __extension__ typedef __int128 wide;
  static Rational from_i128(wide n, wide d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace plrot
