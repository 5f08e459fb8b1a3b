#include "paper_suite.hpp"

#include "plrot/catalog.hpp"
#include "plrot/error.hpp"
#include "plrot/literal.hpp"
#include "plrot/serialize.hpp"

namespace plrot::cli {

namespace {

PaperRow fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

/// Searches the entry's expected pair and compares against the record.
PaperRow check_entry(const std::string& row, const CatalogEntry& e, const RotationBudget& budget) {
  if (auto bad = catalog_ring_failure(e)) return fail(row, *bad);
  const auto& exp = *e.expected;
  ObstructionSearch r = search_obstruction(e.generators.at(exp.f), e.generators.at(exp.g), budget);
  if (!r.found()) return fail(row, "no witness among " + std::to_string(r.candidates) + " candidates");
  const ObstructionWitness& w = *r.witness;
  if (w.orientation != exp.orientation) return fail(row, "witness orientation " + to_string(w.orientation));
  if (!w.rotation.is_irrational()) return fail(row, "rotation " + format_rotation_value(w.rotation));
  const auto& got = w.rotation.irrational().value;
  bool same = false;
  if (const auto* v = std::get_if<FieldElement>(&exp.rotation)) {
    const auto* g = std::get_if<FieldElement>(&got);
    same = g && *g == *v && w.rotation.irrational().proof == IrrationalityProof::QuadraticIrrational;
  } else {
    const auto& lv = std::get<LogRatio>(exp.rotation);
    const auto* g = std::get_if<LogRatio>(&got);
    // log_b(a) = log_{1/b}(1/a)
    same = g && w.rotation.irrational().proof == IrrationalityProof::MultiplicativelyIndependent &&
           ((g->base == lv.base && g->argument == lv.argument) ||
            (g->base == lv.base.reciprocal() && g->argument == lv.argument.reciprocal()));
  }
  if (!same) return fail(row, "rotation " + format_rotation_value(w.rotation) + " differs from the expected value");
  WitnessVerification v = verify_witness(w);
  if (!v.ok) return fail(row, v.detail);
  return {row, true,
          "s = " + format_number(w.s) + ", rotation " + format_rotation_value(w.rotation) + " (" +
              to_string(w.rotation.irrational().proof) + ")"};
}

}  // namespace

ConformanceStats standard_f_conformance(int maxlen, const RotationBudget& budget) {
  CatalogEntry F = standard_F();
  std::vector<PLMap> els;
  SearchResult stats;
  SearchOptions opts;
  opts.maxlen = maxlen;
  opts.node_budget = budget.node_budget;
  enumerate_words(F.generators, opts, [&](const Word&, const PLMap& m) {
    els.push_back(m);
    return false;
  }, stats);

  ConformanceStats out;
  out.elements = els.size();
  for (const auto& a : els) {
    for (const auto& b : els) {
      ++out.pairs;
      ObstructionSearch r = search_obstruction(a, b, budget);
      if (r.witness) {
        ++out.points;
        ++out.irrational;
      }
      for (const auto& oc : r.outcomes) {
        if (oc.reason == "witness") continue;
        ++out.points;
        if (oc.rotation->is_irrational()) {
          ++out.irrational;
        } else if (oc.rotation->is_interval()) {
          ++out.undecided;
        } else {
          ++out.rational;
          const RationalRotation& rr = oc.rotation->rational();
          out.max_q = std::max(out.max_q, rr.q);
          CircleMap gamma = *oc.orientation == Orientation::Forward
                                ? build_gamma(a, b, oc.s)
                                : build_gamma(invert(a), invert(b), b.evaluate(a.evaluate(oc.s)));
          if (!certificate_verifies(gamma, rr)) ++out.bad_certificates;
        }
      }
    }
  }
  return out;
}

std::vector<PaperRow> run_paper_suite(const RotationBudget& budget, int conformance_maxlen) {
  std::vector<PaperRow> rows;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      rows.push_back(body());
    } catch (const Error& e) {
      rows.push_back(fail(name, std::string("error: ") + e.what()));
    }
  };

  guarded("F_tau", [&] { return check_entry("F_tau", cleary_Ftau(), budget); });
  guarded("F_{2,3}", [&] { return check_entry("F_{2,3}", stein_Fpq(2, 3), budget); });
  guarded("F_{3,5}", [&] { return check_entry("F_{3,5}", stein_Fpq(3, 5), budget); });

  guarded("translated_F", [&] {
    const FieldContext r2(2), r5(5);
    struct Case {
      FieldElement xi;
      int n;
    };
    std::vector<Case> cases{{parse_number("sqrt(2)/2", r2), 4}, {parse_number("sqrt(5) - 2", r5), 3}};
    std::string detail;
    for (const auto& c : cases) {
      auto n = translated_F_exponent(c.xi);
      if (n != c.n) return fail("translated_F", "xi = " + format_number(c.xi) + ": unexpected n");
      PaperRow sub = check_entry("translated_F", translated_F(c.xi), budget);
      if (!sub.pass) return fail("translated_F", "xi = " + format_number(c.xi) + ": " + sub.detail);
      if (!detail.empty()) detail += "; ";
      detail += "xi = " + format_number(c.xi) + ", n = " + std::to_string(*n) + ": " + sub.detail;
    }
    return PaperRow{"translated_F", true, detail};
  });

  guarded("standard_F conformance", [&] {
    ConformanceStats s = standard_f_conformance(conformance_maxlen, budget);
    std::string detail = std::to_string(s.pairs) + " pairs, " + std::to_string(s.points) + " valid points: " +
                         std::to_string(s.rational) + " rational (max q " + std::to_string(s.max_q) + "), " +
                         std::to_string(s.irrational) + " irrational, " + std::to_string(s.undecided) +
                         " undecided, " + std::to_string(s.bad_certificates) + " bad certificates";
    bool ok = s.points > 0 && s.irrational == 0 && s.undecided == 0 && s.bad_certificates == 0;
    return PaperRow{"standard_F conformance", ok, detail};
  });

  guarded("fastF", [&] {
    CatalogEntry F = standard_F();
    const GeneratorSystem& sys = F.generators;
    for (const char* rel : {"[x0 x1^-1, x0^-1 x1 x0]", "[x0 x1^-1, x0^-2 x1 x0^2]"}) {
      if (!word_evaluate(sys, parse_word(rel)).is_identity()) {
        return fail("fastF", std::string("relator ") + rel + " is not the identity");
      }
    }
    PLMap a = word_evaluate(sys, parse_word("x0 x1^-1"));
    PLMap b = word_evaluate(sys, parse_word("x1^-1"));
    FastFReport rep = check_fastF(a, b);
    if (!rep.is_f_witness) return fail("fastF", rep.details);
    return PaperRow{"fastF", true, "both relators are the identity; a = x0 x1^-1, b = x1^-1: " + rep.details};
  });
  return rows;
}

}  // namespace plrot::cli
