#include "plrot/rational.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>

#include "plrot/error.hpp"

namespace plrot {
namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) *this = Rational(mpz_from_i64(n));
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  *this = from_i128(n, d);
}

Rational::Rational(const mpz_class& n) { *this = from_mpq(mpq_class(n)); }

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = mpz_get_si(q.get_num_mpz_t());
    long d = mpz_get_si(q.get_den_mpz_t());
    if (n != std::numeric_limits<long>::min()) {
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  Rational r;
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    mpz_class n(s.substr(0, slash), 10);
    mpz_class d(s.substr(slash + 1), 10);
    if (d == 0) throw DivisionByZero();
    return Rational(mpq_class(n, d));
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal '" + s + "'");
  }
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_);
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_i64(num_), mpz_from_i64(den_));
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) return Rational(mpq_class(big_->get_den(), big_->get_num()));
  return from_i128(den_, num_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return from_mpq(mpq_class(n, d));
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return r;
}

std::size_t Rational::bit_size() const {
  if (!big_) {
    auto bits = [](std::uint64_t v) { return v == 0 ? 0 : 64 - __builtin_clzll(v); };
    return bits(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_)) +
           bits(static_cast<std::uint64_t>(den_));
  }
  return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.den_ == 1 && y.den_ == 1) return Rational::from_i128(static_cast<i128>(x.num_) + y.num_, 1);
    std::uint64_t g = gcd64(static_cast<std::uint64_t>(x.den_), static_cast<std::uint64_t>(y.den_));
    i128 dx = x.den_ / static_cast<std::int64_t>(g);
    i128 dy = y.den_ / static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(x.num_) * dy + static_cast<i128>(y.num_) * dx;
    i128 d = dx * y.den_;
    // gcd(t, d) divides g (Knuth 4.5.1).
    if (g > 1 && t != 0) {
      std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(uabs(t) % g), g);
      if (g2 > 1) {
        t /= static_cast<i128>(g2);
        d /= static_cast<i128>(g2);
      }
    } else if (t == 0) {
      return Rational();
    }
    if (fits(t) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(t);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::from_i128(t, d);
  }
  return Rational::from_mpq(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational& x, const Rational& y) {
  if (!y.big_ && y.num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational ny = y;
    ny.num_ = -ny.num_;
    return x + ny;
  }
  return x + (-y);
}

Rational operator*(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0 || y.num_ == 0) return Rational();
    std::int64_t g1 = static_cast<std::int64_t>(
        gcd64(static_cast<std::uint64_t>(x.num_ < 0 ? -x.num_ : x.num_), static_cast<std::uint64_t>(y.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(
        gcd64(static_cast<std::uint64_t>(y.num_ < 0 ? -y.num_ : y.num_), static_cast<std::uint64_t>(x.den_)));
    i128 n = static_cast<i128>(x.num_ / g1) * (y.num_ / g2);
    i128 d = static_cast<i128>(x.den_ / g2) * (y.den_ / g1);
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw DivisionByZero();
  if (!x.big_ && !y.big_) {
    Rational inv;
    if (y.num_ < 0) {
      inv.num_ = -y.den_;
      inv.den_ = -y.num_;
    } else {
      inv.num_ = y.den_;
      inv.den_ = y.num_;
    }
    return x * inv;
  }
  return Rational::from_mpq(x.to_mpq() / y.to_mpq());
}

bool operator==(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
  if (x.big_ && y.big_) return *x.big_ == *y.big_;
  return false;  // canonical: a big value never fits inline
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.den_ == y.den_) return x.num_ <=> y.num_;
    i128 l = static_cast<i128>(x.num_) * y.den_;
    i128 r = static_cast<i128>(y.num_) * x.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int c = cmp(x.to_mpq(), y.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace plrot
