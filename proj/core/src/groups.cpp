#include "plrot/groups.hpp"

#include <algorithm>

#include "plrot/error.hpp"

namespace plrot {

GeneratorSystem::GeneratorSystem(std::vector<std::pair<std::string, PLMap>> gens) {
  for (auto& [name, map] : gens) add(std::move(name), std::move(map));
}

void GeneratorSystem::add(std::string name, PLMap map) {
  if (contains(name)) throw DomainError("generator '" + name + "' bound twice");
  if (!gens_.empty()) {
    const PLMap& first = gens_.front().second;
    if (!(first.context() == map.context())) throw ContextMismatch("generator '" + name + "' lives in another field");
    if (!(first.lo() == map.lo()) || !(first.hi() == map.hi())) {
      throw DomainError("generator '" + name + "' has a different ambient interval");
    }
  }
  gens_.emplace_back(std::move(name), std::move(map));
}

const PLMap& GeneratorSystem::at(std::string_view name) const {
  for (const auto& [n, m] : gens_) {
    if (n == name) return m;
  }
  throw DomainError("unbound generator '" + std::string(name) + "'");
}

bool GeneratorSystem::contains(std::string_view name) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.first == name; });
}

std::vector<PLMap> GeneratorSystem::maps() const {
  std::vector<PLMap> out;
  out.reserve(gens_.size());
  for (const auto& [n, m] : gens_) out.push_back(m);
  return out;
}

IntervalSet GeneratorSystem::orbitals() const {
  auto ms = maps();
  return group_support(ms);
}

const FieldElement& GeneratorSystem::lo() const {
  if (gens_.empty()) throw DomainError("empty generator system");
  return gens_.front().second.lo();
}

const FieldElement& GeneratorSystem::hi() const {
  if (gens_.empty()) throw DomainError("empty generator system");
  return gens_.front().second.hi();
}

PLMap word_evaluate(const GeneratorSystem& sys, const Word& w) {
  PLMap result = PLMap::identity(sys.lo(), sys.hi());
  for (const auto& l : w.letters()) result = compose(result, power(sys.at(l.name), l.exponent));
  return result;
}

// ---------------------------------------------------------------------------

FastFReport check_fastF(const PLMap& a, const PLMap& b) {
  FastFReport r;
  r.commute = compose(a, b) == compose(b, a);
  r.relation_holds = commutator(conjugate(a, b), conjugate(b, a)).is_identity();
  r.is_f_witness = r.relation_holds && !r.commute;

  auto oa = orbitals(a);
  auto ob = orbitals(b);
  if (oa.size() == 1 && ob.size() == 1) {
    auto criterion = [](const PLMap& a0, const OpenInterval& i0, const PLMap& a1, const OpenInterval& i1) {
      return i0.lo < i1.lo && i1.lo < i0.hi && i0.hi < i1.hi && a1.evaluate(i0.hi) <= a0.evaluate(i1.lo);
    };
    r.geometric = criterion(a, oa[0].interval, b, ob[0].interval) || criterion(b, ob[0].interval, a, oa[0].interval);
  }

  r.details = std::string("[a^b, b^a] ") + (r.relation_holds ? "= 1" : "!= 1") + ", ab " +
              (r.commute ? "= ba" : "!= ba");
  if (r.geometric) r.details += std::string(", bump criterion ") + (*r.geometric ? "holds" : "fails");
  return r;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxLevelWords = 200'000;

struct Candidate {
  std::vector<int> letters;  // index 2*g for g, 2*g+1 for g^-1
  PLMap map;
};

Word to_word(const GeneratorSystem& sys, const std::vector<int>& letters) {
  std::vector<Letter> out;
  for (int l : letters) out.push_back({sys.generators()[static_cast<std::size_t>(l / 2)].first, l % 2 == 0 ? 1 : -1});
  return Word(std::move(out));
}

}  // namespace

void enumerate_words(const GeneratorSystem& sys, const SearchOptions& opts,
                     const std::function<bool(const Word&, const PLMap&)>& visit, SearchResult& stats) {
  if (sys.size() == 0) return;
  std::vector<PLMap> letter_maps;
  for (const auto& [name, m] : sys.generators()) {
    letter_maps.push_back(m);
    letter_maps.push_back(invert(m));
  }
  const int nletters = static_cast<int>(letter_maps.size());
  std::vector<Candidate> level{{{}, PLMap::identity(sys.lo(), sys.hi())}};
  bool budget_warned = false;
  for (int len = 1; len <= opts.maxlen; ++len) {
    std::vector<Candidate> next;
    for (const auto& c : level) {
      for (int l = 0; l < nletters; ++l) {
        if (!c.letters.empty() && (c.letters.back() ^ 1) == l) continue;  // free reduction
        PLMap m = compose(c.map, letter_maps[static_cast<std::size_t>(l)]);
        ++stats.words_examined;
        if (m.node_count() > opts.node_budget) {
          ++stats.pruned;
          if (!budget_warned) {
            stats.warnings.push_back("node budget " + std::to_string(opts.node_budget) + " exceeded at length " +
                                     std::to_string(len) + "; pruning");
            budget_warned = true;
          }
          continue;
        }
        std::vector<int> letters = c.letters;
        letters.push_back(l);
        if (visit(to_word(sys, letters), m)) return;
        if (len < opts.maxlen) {
          if (next.size() >= kMaxLevelWords) {
            ++stats.pruned;
            continue;
          }
          next.push_back({std::move(letters), std::move(m)});
        }
      }
    }
    if (next.size() >= kMaxLevelWords) {
      stats.warnings.push_back("word frontier capped at " + std::to_string(kMaxLevelWords) + " at length " +
                               std::to_string(len));
    }
    level = std::move(next);
  }
}

namespace {

void require_orbital(const IntervalSet& orbs, const OpenInterval& j, const char* what) {
  for (const auto& o : orbs.intervals()) {
    if (o == j) return;
  }
  throw DomainError(std::string(what) + " is not an orbital of the generated group");
}

bool disjoint(const FieldElement& a0, const FieldElement& a1, const FieldElement& b0, const FieldElement& b1) {
  return a1 < b0 || b1 < a0;
}

}  // namespace

SearchResult search_support_avoider(const GeneratorSystem& sys, const OpenInterval& j,
                                    const std::vector<OpenInterval>& ks, const SearchOptions& opts) {
  IntervalSet orbs = sys.orbitals();
  require_orbital(orbs, j, "J");
  for (const auto& k : ks) require_orbital(orbs, k, "K");
  SearchResult r;
  enumerate_words(
      sys, opts,
      [&](const Word& w, const PLMap& h) {
        IntervalSet s = support(h);
        if (!s.intersects(j)) return false;
        for (const auto& k : ks) {
          if (s.intersects(k)) return false;
        }
        r.witness = w;
        return true;
      },
      r);
  return r;
}

MoveOffResult search_move_off(const GeneratorSystem& sys, const ClosedInterval& x, const SearchOptions& opts,
                              int verify_bound) {
  MoveOffResult r;
  if (x.empty) {
    r.search.witness = Word();
    r.verified_bound = verify_bound;
    return r;
  }
  if (x.hi < x.lo) throw DomainError("closed interval with hi < lo");
  IntervalSet orbs = sys.orbitals();
  bool inside = std::any_of(orbs.intervals().begin(), orbs.intervals().end(), [&](const OpenInterval& o) {
    return o.contains(x.lo) && o.contains(x.hi);
  });
  if (!inside) {
    // A point of X outside the support is fixed by the whole group.
    r.reason = "X is not contained in the group support";
    return r;
  }
  enumerate_words(
      sys, opts,
      [&](const Word& w, const PLMap& h) {
        FieldElement lo = x.lo, hi = x.hi, ilo = x.lo, ihi = x.hi;
        for (int k = 1; k <= verify_bound; ++k) {
          lo = h.evaluate(lo);
          hi = h.evaluate(hi);
          ilo = h.evaluate_inverse(ilo);
          ihi = h.evaluate_inverse(ihi);
          if (!disjoint(lo, hi, x.lo, x.hi) || !disjoint(ilo, ihi, x.lo, x.hi)) return false;
        }
        r.search.witness = w;
        r.verified_bound = verify_bound;
        return true;
      },
      r.search);
  if (!r.search.found()) r.reason = "no word up to length " + std::to_string(opts.maxlen) + " moves X off itself";
  return r;
}

SearchResult search_bump(const GeneratorSystem& sys, const FieldElement& a, const FieldElement& b,
                         const SearchOptions& opts) {
  SearchResult r;
  if (!(a < b)) return r;
  OpenInterval target{a, b};
  if (sys.orbitals().enclosing(target) == nullptr) return r;
  enumerate_words(
      sys, opts,
      [&](const Word& w, const PLMap& h) {
        auto orbs = orbitals(h);
        if (orbs.size() == 1 && orbs[0].interval == target) {
          r.witness = w;
          return true;
        }
        return false;
      },
      r);
  return r;
}

}  // namespace plrot
