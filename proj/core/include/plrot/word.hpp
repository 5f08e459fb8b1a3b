#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plrot {

struct Letter {
  std::string name;
  std::int64_t exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over named generators: adjacent letters always carry
/// distinct names and every exponent is nonzero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::string name, std::int64_t exponent = 1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  /// Total length, sum of |exponent|.
  std::int64_t length() const noexcept;

  Word inverse() const;
  Word pow(std::int64_t n) const;

  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(const Letter& l);
  std::vector<Letter> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);
/// a^b = b^-1 a b.
Word conjugate(const Word& a, const Word& b);

/// Maps an identifier to a word; returns nullopt for plain generators.
using WordResolver = std::function<std::optional<Word>(std::string_view)>;

/// Parses `f g^-1 [f,g] (f^g) g^2`. `[x,y]` and `x^y` are expanded before
/// reduction; identifiers known to `resolve` are substituted.
Word parse_word(std::string_view text, const WordResolver& resolve = {});

}  // namespace plrot
