#include "plrot/field.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <vector>

#include <mpfr.h>

#include "plrot/error.hpp"
#include "plrot/factor.hpp"

namespace plrot {
namespace {

[[noreturn]] __attribute__((noinline, cold)) void context_mismatch(const FieldElement& x, const FieldElement& y) {
  throw ContextMismatch("field context mismatch: " + x.context().to_string() + " vs " + y.context().to_string());
}

inline void require_same(const FieldElement& x, const FieldElement& y) {
  if (x.context().d() != y.context().d()) context_mismatch(x, y);
}

bool is_square_free(std::int64_t d) {
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void to_mpfr(mpfr_ptr out, const FieldElement& x) {
  mpfr_prec_t prec = mpfr_get_prec(out);
  Mpfr b(prec);
  Mpfr root(prec);
  mpq_class a = x.rational_part().to_mpq();
  mpq_class bq = x.irrational_part().to_mpq();
  mpfr_set_q(out, a.get_mpq_t(), MPFR_RNDN);
  if (!x.is_rational()) {
    mpfr_set_q(b.get(), bq.get_mpq_t(), MPFR_RNDN);
    mpfr_set_si(root.get(), x.context().d(), MPFR_RNDN);
    mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
    mpfr_mul(b.get(), b.get(), root.get(), MPFR_RNDN);
    mpfr_add(out, out, b.get(), MPFR_RNDN);
  }
}

mpfr_prec_t working_precision(const FieldElement& x, int digits) {
  return static_cast<mpfr_prec_t>(128 + 4 * digits + 2 * x.bit_size());
}

// Remove every factor of the primes dividing `base` from n; returns the
// exponent vector over those primes.
std::vector<long> strip_primes(mpz_class& n, const std::vector<std::uint64_t>& primes) {
  std::vector<long> exps;
  for (auto p : primes) {
    long e = 0;
    while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    exps.push_back(e);
  }
  return exps;
}

std::vector<std::uint64_t> prime_list(std::int64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factor_integer(mpz_class(static_cast<long>(n)), kDefaultFactorBound)) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

// Returns k with exps == k * unit_exps when such an integer k exists.
std::optional<long> proportional(const std::vector<long>& exps, const std::vector<long>& unit_exps) {
  std::optional<long> k;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] % unit_exps[i] != 0) return std::nullopt;
    long ki = exps[i] / unit_exps[i];
    if (k && *k != ki) return std::nullopt;
    k = ki;
  }
  return k.value_or(0);
}

// Whether x^n == y^m for integers n, m (either may be negative).
bool powers_equal(const FieldElement& x, long n, const FieldElement& y, long m) {
  return x.pow(n) == y.pow(m);
}

}  // namespace

// ---------------------------------------------------------------------------

FieldContext::FieldContext(std::int64_t d) : d_(d) {
  if (d < 1) throw DomainError("field discriminant must be >= 1");
  if (!is_square_free(d)) throw DomainError("field discriminant " + std::to_string(d) + " is not square-free");
}

std::string FieldContext::to_string() const {
  return d_ == 1 ? std::string("rational") : "sqrt(" + std::to_string(d_) + ")";
}

FieldElement::FieldElement(FieldContext ctx, Rational a, Rational b)
    : ctx_(ctx), a_(std::move(a)), b_(std::move(b)) {
  if (ctx_.is_rational() && !b_.is_zero()) {
    a_ += b_;
    b_ = Rational();
  }
}

FieldElement FieldElement::tau() { return FieldElement(FieldContext::golden(), Rational(1, 2), Rational(1, 2)); }

FieldElement FieldElement::sqrt_d(FieldContext ctx) {
  if (ctx.is_rational()) return FieldElement(ctx, 1);
  return FieldElement(ctx, 0, 1);
}

int FieldElement::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d b^2 (never equal for square-free d > 1).
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(ctx_.d());
  return lhs > rhs ? sa : sb;
}

FieldElement FieldElement::conjugate() const { return FieldElement(ctx_, a_, -b_); }

Rational FieldElement::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * Rational(ctx_.d());
}

FieldElement FieldElement::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  if (b_.is_zero()) return FieldElement(ctx_, a_.reciprocal());
  Rational n = norm();
  return FieldElement(ctx_, a_ / n, -b_ / n);
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  if (b_.is_zero()) return FieldElement(ctx_, a_.pow(exponent));
  FieldElement result(ctx_, 1);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::in_context(FieldContext ctx) const {
  if (ctx == ctx_) return *this;
  if (!b_.is_zero()) {
    throw ContextMismatch("irrational value cannot move from " + ctx_.to_string() + " to " + ctx.to_string());
  }
  return FieldElement(ctx, a_);
}

mpz_class FieldElement::floor() const {
  if (b_.is_zero()) return a_.floor();
  Mpfr v(working_precision(*this, 20));
  to_mpfr(v.get(), *this);
  mpfr_floor(v.get(), v.get());
  mpz_class k;
  mpfr_get_z(k.get_mpz_t(), v.get(), MPFR_RNDN);
  // Exact correction of the floating estimate.
  while (FieldElement(ctx_, Rational(k)) > *this) k -= 1;
  while (FieldElement(ctx_, Rational(mpz_class(k + 1))) <= *this) k += 1;
  return k;
}

double FieldElement::approx() const {
  if (b_.is_zero()) return a_.to_double();
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(ctx_.d()));
}

std::string FieldElement::to_decimal(int digits) const {
  if (is_zero()) return "0";
  Mpfr v(working_precision(*this, digits));
  to_mpfr(v.get(), *this);
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v.get(), MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^exp
  std::string out;
  if (exp > 0 && exp <= digits) {
    out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
  } else if (exp <= 0 && exp > -20) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else {
    out = mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp - 1);
  }
  if (out.back() == '.') out.pop_back();
  return sign + out;
}

FieldElement FieldElement::operator-() const { return FieldElement(ctx_, -a_, -b_); }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.b_.is_zero() && y.b_.is_zero()) return FieldElement(x.ctx_, x.a_ + y.a_);
  return FieldElement(x.ctx_, x.a_ + y.a_, x.b_ + y.b_);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.b_.is_zero() && y.b_.is_zero()) return FieldElement(x.ctx_, x.a_ - y.a_);
  return FieldElement(x.ctx_, x.a_ - y.a_, x.b_ - y.b_);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.b_.is_zero() && y.b_.is_zero()) return FieldElement(x.ctx_, x.a_ * y.a_);
  if (x.b_.is_zero()) return FieldElement(x.ctx_, x.a_ * y.a_, x.a_ * y.b_);
  if (y.b_.is_zero()) return FieldElement(x.ctx_, x.a_ * y.a_, x.b_ * y.a_);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.ctx_.d());
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return FieldElement(x.ctx_, std::move(a), std::move(b));
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (y.is_zero()) throw DivisionByZero();
  if (y.b_.is_zero()) return FieldElement(x.ctx_, x.a_ / y.a_, x.b_ / y.a_);
  return x * y.reciprocal();
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ <=> y.a_;
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  os << x.rational_part();
  if (!x.is_rational()) os << " + " << x.irrational_part() << "*sqrt(" << x.context().d() << ")";
  return os;
}

FieldElement qf_arith(const FieldElement& x, const FieldElement& y, Op op) {
  switch (op) {
    case Op::Add: return x + y;
    case Op::Sub: return x - y;
    case Op::Mul: return x * y;
    case Op::Div: return x / y;
  }
  throw DomainError("unknown operation");
}

int qf_sign(const FieldElement& x) { return x.sign(); }

bool qf_is_rational(const FieldElement& x) { return x.is_rational(); }

// ---------------------------------------------------------------------------

LogRatioDecision mul_dependence(const Rational& a, const Rational& b, std::uint64_t factor_bound) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("mul_dependence needs positive arguments");
  if (b == Rational(1)) throw DomainError("logarithm base must differ from 1");
  if (a == Rational(1)) return {true, Rational()};
  Factorization fa = factor_rational(a.numerator(), a.denominator(), factor_bound);
  Factorization fb = factor_rational(b.numerator(), b.denominator(), factor_bound);
  // log_b(a) = m/n  <=>  n * e_a == m * e_b for every prime.
  auto [p0, eb0] = *fb.begin();
  long ea0 = fa.count(p0) ? fa.at(p0) : 0;
  Rational ratio(ea0, eb0);
  mpz_class m = ratio.numerator();
  mpz_class n = ratio.denominator();
  Factorization all = fa;
  for (auto [p, e] : fb) all.emplace(p, 0);
  for (auto [p, unused] : all) {
    (void)unused;
    long ea = fa.count(p) ? fa.at(p) : 0;
    long eb = fb.count(p) ? fb.at(p) : 0;
    if (n * ea != m * eb) return {false, Rational()};
  }
  return {true, ratio};
}

std::optional<long> tau_exponent(const FieldElement& x, long max_exponent) {
  if (x.context().d() != 5 || x.sign() <= 0) return std::nullopt;
  Rational n = x.norm();
  if (n != Rational(1) && n != Rational(-1)) return std::nullopt;
  double lx = std::log(std::abs(x.approx()));
  if (!std::isfinite(lx)) return std::nullopt;
  long k = std::lround(lx / std::log((1.0 + std::sqrt(5.0)) / 2.0));
  if (std::labs(k) > max_exponent + 1) return std::nullopt;
  FieldElement t = FieldElement::tau();
  for (long c : {k, k - 1, k + 1}) {
    if (std::labs(c) <= max_exponent && t.pow(c) == x) return c;
  }
  return std::nullopt;
}

LogRatioDecision log_ratio(const FieldElement& a, const FieldElement& b, std::uint64_t factor_bound) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("log_ratio needs positive arguments");
  require_same(a, b);
  FieldElement one(a.context(), 1);
  if (b == one) throw DomainError("logarithm base must differ from 1");
  if (a == one) return {true, Rational()};
  if (a.is_rational() && b.is_rational()) return mul_dependence(a.rational_part(), b.rational_part(), factor_bound);

  Rational na = a.norm().abs();
  Rational nb = b.norm().abs();
  bool unit_a = na == Rational(1);
  bool unit_b = nb == Rational(1);
  if (unit_a != unit_b) return {false, Rational()};

  if (!unit_a) {
    // Norms fix the only possible exponent ratio; confirm it on the elements.
    LogRatioDecision by_norm = mul_dependence(na, nb, factor_bound);
    if (!by_norm.dependent) return by_norm;
    long m = by_norm.ratio.numerator().get_si();
    long n = by_norm.ratio.denominator().get_si();
    if (powers_equal(a, n, b, m)) return by_norm;
    return {false, Rational()};
  }

  // Both are positive units, hence powers of the fundamental unit; the
  // exponent of b is at most log(b)/log(tau) since tau is the smallest unit > 1.
  double la = std::log(a.approx());
  double lb = std::log(b.approx());
  double r = la / lb;
  long bound = static_cast<long>(std::abs(lb) / std::log((1.0 + std::sqrt(5.0)) / 2.0)) + 2;
  // Continued-fraction convergents of r.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = r;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(x);
    long ai = static_cast<long>(fl);
    long h2 = ai * h1 + h0;
    long k2 = ai * k1 + k0;
    if (k2 > bound) break;
    if (powers_equal(a, k2, b, h2)) return {true, Rational(h2, k2)};
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = x - fl;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  throw Error("failed to resolve logarithm ratio of quadratic units");
}

// ---------------------------------------------------------------------------

RingSpec RingSpec::stein(std::int64_t p, std::int64_t q) {
  if (!(1 < p && p < q)) throw DomainError("stein(p,q) requires 1 < p < q");
  if (std::gcd(p, q) != 1) throw DomainError("stein(p,q) requires coprime p and q");
  RingSpec r(Kind::Stein);
  r.p_ = p;
  r.q_ = q;
  return r;
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Dyadic: return "dyadic";
    case Kind::Golden: return "golden";
    case Kind::Stein: return "stein(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    case Kind::AllRationals: return "all-rationals";
    case Kind::AllField: return "all-field";
  }
  return "?";
}

bool ring_member(const FieldElement& x, const RingSpec& spec, RingRole role) {
  const bool slope = role == RingRole::Slope;
  if (slope && x.sign() <= 0) return false;
  switch (spec.kind()) {
    case RingSpec::Kind::AllField:
      return true;
    case RingSpec::Kind::AllRationals:
      return x.is_rational();
    case RingSpec::Kind::Dyadic: {
      if (!x.is_rational()) return false;
      mpz_class num = x.rational_part().numerator();
      mpz_class den = x.rational_part().denominator();
      auto is_pow2 = [](const mpz_class& v) { return v > 0 && mpz_popcount(v.get_mpz_t()) == 1; };
      if (!slope) return is_pow2(den);
      return is_pow2(den) && is_pow2(num) && (num == 1 || den == 1);
    }
    case RingSpec::Kind::Golden: {
      if (slope) {
        if (x.context().d() != 5) return x == FieldElement(x.context(), 1);
        return tau_exponent(x).has_value();
      }
      // Z[tau] = { (u + v sqrt5)/2 : u, v integers, u == v mod 2 }.
      Rational u = x.rational_part() * Rational(2);
      Rational v = x.irrational_part() * Rational(2);
      if (!u.is_integer() || !v.is_integer()) return false;
      if (x.context().d() != 5) return x.rational_part().is_integer() && v.is_zero();
      mpz_class diff = u.numerator() - v.numerator();
      return mpz_even_p(diff.get_mpz_t()) != 0;
    }
    case RingSpec::Kind::Stein: {
      if (!x.is_rational()) return false;
      std::vector<std::uint64_t> pp = prime_list(spec.p());
      std::vector<std::uint64_t> qp = prime_list(spec.q());
      mpz_class num = abs(x.rational_part().numerator());
      mpz_class den = x.rational_part().denominator();
      if (!slope) {
        strip_primes(den, pp);
        strip_primes(den, qp);
        return den == 1;
      }
      // slope == p^i q^j for integers i, j.
      mpz_class pv(static_cast<long>(spec.p()));
      mpz_class qv(static_cast<long>(spec.q()));
      std::vector<long> unit_p = strip_primes(pv, pp);
      std::vector<long> unit_q = strip_primes(qv, qp);
      std::vector<long> np = strip_primes(num, pp), nq = strip_primes(num, qp);
      std::vector<long> dp = strip_primes(den, pp), dq = strip_primes(den, qp);
      if (num != 1 || den != 1) return false;
      std::vector<long> ep(np.size()), eq(nq.size());
      for (std::size_t i = 0; i < np.size(); ++i) ep[i] = np[i] - dp[i];
      for (std::size_t i = 0; i < nq.size(); ++i) eq[i] = nq[i] - dq[i];
      return proportional(ep, unit_p).has_value() && proportional(eq, unit_q).has_value();
    }
  }
  return false;
}

}  // namespace plrot
