#include "plrot/obstruction.hpp"

#include <algorithm>

#include "plrot/error.hpp"

namespace plrot {

std::string to_string(Orientation o) { return o == Orientation::Forward ? "forward" : "mirrored"; }

namespace {

/// Both orientations at s, given sf and sg; the inverses are computed on
/// demand when not supplied.
ObstructionCheck check_with(const PLMap& f, const PLMap& g, const FieldElement& s, const FieldElement& sf,
                            const FieldElement& sg, const RotationBudget& budget, const PLMap* finv,
                            const PLMap* ginv) {
  if (sf == s) return NotAtS{"s is fixed by f", std::nullopt};
  if (s < sf) {
    if (!(sf <= sg)) return NotAtS{"forward: sf <= sg fails", std::nullopt};
    FieldElement sfg = g.evaluate(sf);
    if (!(sg < sfg)) return NotAtS{"forward: sg < sfg fails", std::nullopt};
    if (!(f.evaluate(sg) == sfg)) return NotAtS{"forward: sfg == sgf fails", std::nullopt};
    CircleMap gamma = build_gamma(f, g, s);
    RotationResult rho = rotation_number(gamma, budget);
    if (!rho.is_irrational()) return NotAtS{"rotation number is not certified irrational", std::move(rho)};
    return ObstructionWitness{f, g, s, Orientation::Forward, std::move(rho), std::move(gamma)};
  }
  // s > sf >= sg > s(fg) = s(gf) is the forward condition for the inverses at s(fg).
  if (!(sg <= sf)) return NotAtS{"mirrored: sf >= sg fails", std::nullopt};
  FieldElement sfg = g.evaluate(sf);
  if (!(sfg < sg)) return NotAtS{"mirrored: sg > sfg fails", std::nullopt};
  if (!(f.evaluate(sg) == sfg)) return NotAtS{"mirrored: sfg == sgf fails", std::nullopt};
  PLMap fi = finv ? *finv : invert(f);
  PLMap gi = ginv ? *ginv : invert(g);
  CircleMap gamma = build_gamma(fi, gi, sfg);
  RotationResult rho = rotation_number(gamma, budget);
  if (!rho.is_irrational()) return NotAtS{"rotation number is not certified irrational", std::move(rho)};
  return ObstructionWitness{f, g, s, Orientation::Mirrored, std::move(rho), std::move(gamma)};
}

}  // namespace

ObstructionCheck check_obstruction_at(const PLMap& f, const PLMap& g, const FieldElement& s,
                                      const RotationBudget& budget) {
  if (!(f.lo() == g.lo()) || !(f.hi() == g.hi())) return NotAtS{"f and g act on different intervals", std::nullopt};
  if (!(f.context() == s.context())) return NotAtS{"s lives in another field", std::nullopt};
  if (s < f.lo() || f.hi() < s) return NotAtS{"s outside the ambient interval", std::nullopt};
  return check_with(f, g, s, f.evaluate(s), g.evaluate(s), budget, nullptr, nullptr);
}

std::vector<FieldElement> candidate_points(const PLMap& f, const PLMap& g) {
  std::vector<FieldElement> base;
  for (const PLMap* m : {&f, &g}) {
    for (const auto& b : m->breakpoints()) base.push_back(b);
  }
  for (const auto& b : compose(f, g).breakpoints()) base.push_back(b);
  for (const auto& b : compose(g, f).breakpoints()) base.push_back(b);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<FieldElement> pts;
  pts.reserve(5 * base.size() + 8);
  for (const auto& b : base) {
    pts.push_back(b);
    pts.push_back(f.evaluate(b));
    pts.push_back(f.evaluate_inverse(b));
    pts.push_back(g.evaluate(b));
    pts.push_back(g.evaluate_inverse(b));
  }
  for (const PLMap* m : {&f, &g}) {
    for (const auto& o : orbitals(*m)) {
      pts.push_back(o.interval.lo);
      pts.push_back(o.interval.hi);
    }
  }
  std::vector<PLMap> gens{f, g};
  IntervalSet orbs = group_support(gens);
  for (const auto& iv : orbs.intervals()) {
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<FieldElement> out;
  out.reserve(2 * pts.size());
  const FieldElement two(f.context(), Rational(2));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out.push_back((pts[i - 1] + pts[i]) / two);
    out.push_back(pts[i]);
  }
  // Ambient endpoints are fixed by everything.
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const FieldElement& x) { return x == f.lo() || x == f.hi(); }),
            out.end());
  return out;
}

std::size_t ObstructionSearch::count_rational() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const CandidateOutcome& o) {
    return o.rotation && o.rotation->is_rational();
  }));
}

std::size_t ObstructionSearch::count_interval() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const CandidateOutcome& o) {
    return o.rotation && o.rotation->is_interval();
  }));
}

std::size_t ObstructionSearch::count_irrational() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const CandidateOutcome& o) {
    return o.rotation && o.rotation->is_irrational();
  }));
}

ObstructionSearch search_obstruction(const PLMap& f, const PLMap& g, const RotationBudget& budget) {
  ObstructionSearch out;
  if (!(f.lo() == g.lo()) || !(f.hi() == g.hi())) return out;
  // Every precondition needs a point that f and g move the same way.
  auto of = orbitals(f);
  auto og = orbitals(g);
  bool overlap = false;
  for (const auto& a : of) {
    for (const auto& b : og) overlap = overlap || (a.direction == b.direction && a.interval.overlaps(b.interval));
  }
  if (!overlap) return out;
  auto pts = candidate_points(f, g);
  out.candidates = pts.size();
  std::optional<PLMap> fi, gi;
  for (const auto& s : pts) {
    // Cheap rejection: f and g must move s the same way.
    FieldElement sf = f.evaluate(s);
    FieldElement sg = g.evaluate(s);
    int df = (sf - s).sign();
    if (df == 0 || df != (sg - s).sign()) continue;
    if (df < 0 && !fi) {
      fi = invert(f);
      gi = invert(g);
    }
    ObstructionCheck r = check_with(f, g, s, sf, sg, budget, fi ? &*fi : nullptr, gi ? &*gi : nullptr);
    if (auto* w = std::get_if<ObstructionWitness>(&r)) {
      out.outcomes.push_back({s, w->orientation, w->rotation, "witness"});
      out.witness = std::move(*w);
      return out;
    }
    auto& miss = std::get<NotAtS>(r);
    if (miss.rotation) {
      out.outcomes.push_back({s, df > 0 ? Orientation::Forward : Orientation::Mirrored, std::move(miss.rotation),
                              std::move(miss.reason)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Incremental check of k/n <= rho <= (k+1)/n as n grows.
class Sandwich {
 public:
  explicit Sandwich(const RotationResult& rho) : rho_(rho) {
    if (rho.is_irrational()) {
      if (const auto* lr = std::get_if<LogRatio>(&rho.irrational().value)) {
        log_ = lr;
        const FieldElement one(lr->base.context(), Rational(1));
        an_ = one;
        bk_ = one;
        b_gt_one_ = one < lr->base;
      }
    }
  }

  bool check(std::int64_t k, std::int64_t n) {
    if (!log_) return sandwich_contains(rho_, k, n);
    an_ *= log_->argument;
    while (k_ < k) {
      bk_ *= log_->base;
      ++k_;
    }
    if (k_ != k) return false;  // floors never decrease along an orbit
    FieldElement bk1 = bk_ * log_->base;
    return b_gt_one_ ? (bk_ <= an_ && an_ <= bk1) : (an_ <= bk_ && bk1 <= an_);
  }

 private:
  const RotationResult& rho_;
  const LogRatio* log_ = nullptr;
  FieldElement an_, bk_;
  std::int64_t k_ = 0;
  bool b_gt_one_ = true;
};

}  // namespace

WitnessVerification verify_witness(const ObstructionWitness& w, std::int64_t max_n) {
  WitnessVerification v;
  const FieldElement& s0 = w.s;
  FieldElement sf = w.f.evaluate(s0), sg = w.g.evaluate(s0);
  FieldElement sfg = w.g.evaluate(sf), sgf = w.f.evaluate(sg);
  bool pre = w.orientation == Orientation::Forward ? (s0 < sf && sf <= sg && sg < sfg && sfg == sgf)
                                                   : (sf < s0 && sg <= sf && sfg < sg && sfg == sgf);
  if (!pre) {
    v.detail = "precondition fails for the " + to_string(w.orientation) + " orientation";
    return v;
  }
  if (!w.rotation.is_irrational()) {
    v.detail = "rotation is not symbolic irrational";
    return v;
  }
  if (const auto* val = std::get_if<FieldElement>(&w.rotation.irrational().value)) {
    if (val->is_rational()) {
      v.detail = "symbolic value is rational";
      return v;
    }
  }
  if (compose(w.f, w.g) == compose(w.g, w.f)) {
    v.detail = "f and g commute";
    return v;
  }

  // Forward data (a, b, t): gamma(x) = xa if xa < tb, else xa b^-1.
  PLMap a = w.orientation == Orientation::Forward ? w.f : invert(w.f);
  PLMap b = w.orientation == Orientation::Forward ? w.g : invert(w.g);
  FieldElement t = w.orientation == Orientation::Forward ? s0 : sfg;
  FieldElement tb = b.evaluate(t);
  Sandwich sandwich(w.rotation);
  FieldElement x = t;
  std::int64_t wraps = 0;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    FieldElement xa = a.evaluate(x);
    if (xa < tb) {
      x = std::move(xa);
    } else {
      x = b.evaluate_inverse(xa);
      ++wraps;
    }
    if (!sandwich.check(wraps, n)) {
      v.detail = "wrap sandwich fails at n = " + std::to_string(n) + " (wraps " + std::to_string(wraps) + ")";
      return v;
    }
  }
  v.ok = true;
  v.detail = "preconditions hold, f and g do not commute, sandwich holds for n <= " + std::to_string(max_n);
  return v;
}

}  // namespace plrot
