#include "plrot/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "plrot/error.hpp"

namespace plrot {

Word::Word(std::vector<Letter> letters) {
  for (const auto& l : letters) push(l);
}

Word Word::generator(std::string name, std::int64_t exponent) {
  Word w;
  w.push({std::move(name), exponent});
  return w;
}

void Word::push(const Letter& l) {
  if (l.exponent == 0) return;
  if (!letters_.empty() && letters_.back().name == l.name) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

std::int64_t Word::length() const noexcept {
  std::int64_t n = 0;
  for (const auto& l : letters_) n += std::llabs(l.exponent);
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->name, -it->exponent});
  return w;
}

Word Word::pow(std::int64_t n) const {
  Word base = n < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t k = 0; k < std::llabs(n); ++k) out = out * base;
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.name;
    if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
  }
  return s;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& l : b.letters_) w.push(l);
  return w;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word conjugate(const Word& a, const Word& b) { return b.inverse() * a * b; }

// ---------------------------------------------------------------------------

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const WordResolver& resolve) : text_(text), resolve_(resolve) {}

  Word parse() {
    Word w = sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in word '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_term_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '[' || c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '1';
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Word sequence() {
    Word w;
    while (peek_term_start()) {
      w = w * term();
      eat('*');
    }
    return w;
  }

  Word term() {
    Word base = atom();
    while (eat('^')) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+' ||
                                  std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        base = base.pow(integer());
      } else {
        base = conjugate(base, atom());
      }
    }
    return base;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected integer exponent");
    return std::stoll(digits);
  }

  Word atom() {
    skip_ws();
    if (eat('[')) {
      Word a = sequence();
      if (!eat(',')) fail("expected ',' in commutator");
      Word b = sequence();
      if (!eat(']')) fail("expected ']'");
      return commutator(a, b);
    }
    if (eat('(')) {
      Word a = sequence();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    if (pos_ < text_.size() && text_[pos_] == '1' &&
        (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return Word();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail("expected generator name");
    std::string_view name = text_.substr(start, pos_ - start);
    if (resolve_) {
      if (auto w = resolve_(name)) return *w;
    }
    return Word::generator(std::string(name));
  }

  std::string_view text_;
  const WordResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const WordResolver& resolve) { return WordParser(text, resolve).parse(); }

}  // namespace plrot
