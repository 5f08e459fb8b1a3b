#pragma once

#include <map>
#include <string>
#include <string_view>

#include "plrot/groups.hpp"

namespace plrot::cli {

/// Contents of a session file: one field, named maps, named words.
struct Session {
  FieldContext field;
  GeneratorSystem maps;
  std::map<std::string, Word, std::less<>> words;

  /// Parses a word, substituting named words.
  Word word(std::string_view text) const;
  /// Evaluates a word over the session maps.
  PLMap evaluate(std::string_view text) const;
  FieldElement number(std::string_view text) const;
};

/// Statements end with ';' outside brackets; '#' starts a comment.
///
///   field sqrt(5);
///   map f = pl { ambient = [0, 1]; nodes = [(0, 0), (tau^-3, tau^-2), (1, 1)] };
///   map g = catalog cleary_Ftau.g;
///   map h = catalog stein_Fpq(2, 3).f;
///   word w = f g^-1;
///
/// Throws ParseError carrying the statement's line number.
Session parse_session(std::string_view text);
Session load_session(const std::string& path);

/// Parses the body of `pl { ... }` (without braces).
PLMap parse_pl_body(std::string_view body, const FieldContext& ctx);

/// Field implied by a literal: sqrt(5) for `tau`, sqrt(m) for the
/// square-free part m of any `sqrt(n)`, otherwise the rationals.
FieldContext guess_field(std::string_view literal);

}  // namespace plrot::cli
