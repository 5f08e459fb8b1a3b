#include "plrot/literal.hpp"

#include <cctype>

#include "plrot/error.hpp"

namespace plrot {
namespace {

class NumberParser {
 public:
  NumberParser(std::string_view text, FieldContext ctx) : text_(text), ctx_(ctx) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in number '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Accepts '*' and the UTF-8 middle dot as multiplication.
  bool eat_times() {
    if (eat('*')) return true;
    skip_ws();
    if (text_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      std::size_t end = pos_ + w.size();
      if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        return false;
      }
      pos_ = end;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (eat_times()) {
        v = v * unary();
      } else if (eat('/')) {
        FieldElement d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  FieldElement power() {
    FieldElement base = primary();
    if (eat('^')) {
      long e = integer_exponent();
      if (base.is_zero() && e < 0) fail("zero to a negative power");
      return base.pow(e);
    }
    return base;
  }

  long integer_exponent() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    bool paren = eat('(');
    if (paren && eat('-')) neg = !neg;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  FieldElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat('(')) {
      FieldElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat_word("tau")) {
      if (ctx_.d() != 5) fail("tau requires field sqrt(5)");
      return FieldElement::tau();
    }
    if (eat_word("sqrt")) {
      if (!eat('(')) fail("expected '(' after sqrt");
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("sqrt takes a non-negative integer");
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      if (!eat(')')) fail("expected ')'");
      return sqrt_of(n);
    }
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return FieldElement(ctx_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  // sqrt(n) = k sqrt(m) with m square-free; m must be 1 or the field's d.
  FieldElement sqrt_of(const mpz_class& n) {
    if (n == 0) return FieldElement(ctx_, 0);
    mpz_class k = 1;
    mpz_class m = n;
    for (unsigned long p = 2; mpz_cmp_ui(m.get_mpz_t(), p * p) >= 0 && p < 1'000'000; ++p) {
      while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p * p);
        k *= p;
      }
    }
    if (m == 1) return FieldElement(ctx_, Rational(k));
    if (!m.fits_slong_p() || m.get_si() != ctx_.d()) {
      fail("sqrt(" + n.get_str() + ") is not in field " + ctx_.to_string());
    }
    return FieldElement(ctx_, 0, Rational(k));
  }

  std::string_view text_;
  FieldContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_number(std::string_view text, FieldContext ctx) { return NumberParser(text, ctx).parse(); }

std::string format_number(const FieldElement& x) {
  if (x.is_rational()) return x.rational_part().to_string();
  if (x.context().d() == 5) {
    if (auto k = tau_exponent(x)) return *k == 1 ? std::string("tau") : "tau^" + std::to_string(*k);
    if (auto k = tau_exponent(-x)) return *k == 1 ? std::string("-tau") : "-tau^" + std::to_string(*k);
  }
  const Rational& a = x.rational_part();
  const Rational& b = x.irrational_part();
  std::string root = "sqrt(" + std::to_string(x.context().d()) + ")";
  std::string bpart;
  Rational mag = b.abs();
  bpart = mag == Rational(1) ? root : mag.to_string() + "*" + root;
  if (a.is_zero()) return (b.sign() < 0 ? "-" : "") + bpart;
  return a.to_string() + (b.sign() < 0 ? " - " : " + ") + bpart;
}

}  // namespace plrot
