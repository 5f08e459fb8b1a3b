#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plrot/plmap.hpp"
#include "plrot/word.hpp"

namespace plrot {

/// Named generators sharing one ambient interval, in a fixed order. The
/// order defines the shortlex enumeration used by every search.
class GeneratorSystem {
 public:
  GeneratorSystem() = default;
  explicit GeneratorSystem(std::vector<std::pair<std::string, PLMap>> gens);

  void add(std::string name, PLMap map);
  const PLMap& at(std::string_view name) const;
  bool contains(std::string_view name) const;

  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<std::pair<std::string, PLMap>>& generators() const noexcept { return gens_; }
  std::vector<PLMap> maps() const;
  /// Union of generator supports; its components are the orbitals.
  IntervalSet orbitals() const;

  const FieldElement& lo() const;
  const FieldElement& hi() const;

 private:
  std::vector<std::pair<std::string, PLMap>> gens_;
};

/// Right action: the word `a b` evaluates to "a then b". Throws DomainError
/// for an unbound name. An empty word evaluates to the identity.
PLMap word_evaluate(const GeneratorSystem& sys, const Word& w);

struct FastFReport {
  bool is_f_witness = false;     ///< relation holds and a, b do not commute
  bool relation_holds = false;   ///< [a^b, b^a] == 1
  bool commute = false;          ///< ab == ba
  /// Geometric criterion for two single bumps (s0,t0), (s1,t1) with
  /// s0 < s1 < t0 < t1 and t0 a1 <= s1 a0; nullopt unless both are bumps.
  std::optional<bool> geometric;
  std::string details;
};

FastFReport check_fastF(const PLMap& a, const PLMap& b);

struct SearchOptions {
  int maxlen = 8;
  std::size_t node_budget = 10'000;
};

struct SearchResult {
  std::optional<Word> witness;
  std::size_t words_examined = 0;
  std::size_t pruned = 0;  ///< words dropped by the node budget
  std::vector<std::string> warnings;

  bool found() const noexcept { return witness.has_value(); }
};

/// Breadth-first, shortlex-first search for h in <sys> whose support meets J
/// and misses every K. J and each K must be orbitals of <sys>. A miss is a
/// bounded-search verdict, not a proof that no such element exists.
SearchResult search_support_avoider(const GeneratorSystem& sys, const OpenInterval& j,
                                    const std::vector<OpenInterval>& ks, const SearchOptions& opts = {});

/// Compact interval [lo, hi]; `empty` marks the empty set.
struct ClosedInterval {
  FieldElement lo;
  FieldElement hi;
  bool empty = false;

  static ClosedInterval none() { return {FieldElement(), FieldElement(), true}; }
};

struct MoveOffResult {
  SearchResult search;
  int verified_bound = 0;  ///< X h^k and X are disjoint for 1 <= |k| <= this
  std::string reason;      ///< why nothing was found, when applicable
};

/// Search for h with X h^k disjoint from X; the returned witness is checked
/// exactly for 1 <= |k| <= verify_bound, not for all k.
MoveOffResult search_move_off(const GeneratorSystem& sys, const ClosedInterval& x, const SearchOptions& opts = {},
                              int verify_bound = 32);

/// Search for h with supt(h) == (a, b) exactly.
SearchResult search_bump(const GeneratorSystem& sys, const FieldElement& a, const FieldElement& b,
                         const SearchOptions& opts = {});

/// Calls visit(word, map) on every freely reduced word of length 1..maxlen
/// in shortlex order (generator order, g before g^-1) until visit returns true.
void enumerate_words(const GeneratorSystem& sys, const SearchOptions& opts,
                     const std::function<bool(const Word&, const PLMap&)>& visit, SearchResult& stats);

}  // namespace plrot
