#include <algorithm>
#include <numeric>
#include <random>

#include "plrot/circlemap.hpp"
#include "plrot/error.hpp"

namespace plrot {

namespace {

FieldElement from_int(const FieldContext& ctx, std::int64_t k) { return FieldElement(ctx, Rational(k)); }

/// Bit size above which the iteration branch stops following an orbit.
constexpr std::size_t kOrbitBitLimit = 1 << 14;

std::optional<RotationResult> rational_from_symbolic(const CircleMap& c, const Rational& rho, const std::string& route,
                                                     std::vector<std::string>& notes) {
  if (!rho.numerator().fits_slong_p() || !rho.denominator().fits_slong_p()) return std::nullopt;
  RationalRotation r{rho.numerator().get_si(), rho.denominator().get_si(), c.s()};
  // Every point is periodic for a rigid rotation; s is the certificate.
  if (r.q > 10'000'000) {
    notes.push_back("symbolic value " + rho.to_string() + " has a period too long to certify by iteration");
    return std::nullopt;
  }
  if (!certificate_verifies(c, r)) throw Error("internal: symbolic rational rotation failed to certify");
  return RotationResult{r, route, notes};
}

std::optional<RotationResult> symbolic_branch(const CircleMap& c, std::vector<std::string>& notes) {
  const FieldContext& ctx = c.s().context();
  if (auto t = detect_translation_form(c)) {
    FieldElement rho = t->xi / t->eta;
    if (rho.is_rational()) {
      if (auto r = rational_from_symbolic(c, rho.rational_part(), "translation", notes)) return r;
      return std::nullopt;
    }
    return RotationResult{SymbolicIrrational{rho, IrrationalityProof::QuadraticIrrational}, "translation", notes};
  }
  if (auto sc = detect_scaling_form(c)) {
    LogRatioDecision dec;
    try {
      dec = log_ratio(sc->a, sc->b);
    } catch (const ResourceLimit& e) {
      notes.push_back(std::string("scaling form found but undecided: ") + e.what());
      return std::nullopt;
    }
    if (dec.dependent) {
      if (auto r = rational_from_symbolic(c, dec.ratio, "scaling", notes)) return r;
      return std::nullopt;
    }
    return RotationResult{SymbolicIrrational{LogRatio{sc->b, sc->a}, IrrationalityProof::MultiplicativelyIndependent},
                          "scaling", notes};
  }
  // A lift that is a single translation is a rigid rotation.
  const CircleLift& lift = c.lift();
  if (lift.node_count() == 2 && lift.slopes()[0] == from_int(ctx, 1)) {
    FieldElement rho = (lift.nodes()[0].y - c.s()) / c.circumference();
    if (rho.is_rational()) return rational_from_symbolic(c, rho.rational_part(), "rigid", notes);
    return RotationResult{SymbolicIrrational{rho, IrrationalityProof::QuadraticIrrational}, "rigid", notes};
  }
  return std::nullopt;
}

/// Smallest integer >= x / l and largest integer <= y / l.
std::pair<mpz_class, mpz_class> multiples_between(const FieldElement& x, const FieldElement& y, const FieldElement& l) {
  FieldElement lo = x / l;
  mpz_class a = lo.floor();
  if (!(FieldElement(lo.context(), Rational(a)) == lo)) a += 1;
  return {a, (y / l).floor()};
}

}  // namespace

std::optional<RationalRotation> find_periodic_orbit(const CircleMap& c, int q_max, std::size_t node_budget,
                                                    std::vector<std::string>* notes) {
  const FieldContext& ctx = c.s().context();
  const FieldElement l = c.circumference();
  const FieldElement end = c.sg();
  const FieldElement one = from_int(ctx, 1);
  CircleLift acc = c.lift();
  for (int q = 1; q <= q_max; ++q) {
    if (q > 1) acc = acc.then(c.lift());
    if (acc.node_count() > node_budget) {
      if (notes) {
        notes->push_back("node budget " + std::to_string(node_budget) + " exceeded at q = " + std::to_string(q));
      }
      return std::nullopt;
    }
    auto nodes = acc.nodes();
    auto slopes = acc.slopes();
    std::optional<std::pair<std::int64_t, FieldElement>> best;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      FieldElement d0 = nodes[i].y - nodes[i].x;
      FieldElement d1 = nodes[i + 1].y - nodes[i + 1].x;
      auto [pa, pb] = multiples_between(std::min(d0, d1), std::max(d0, d1), l);
      for (mpz_class p = pa; p <= pb; ++p) {
        FieldElement pl = FieldElement(ctx, Rational(p)) * l;
        FieldElement x;
        if (slopes[i] == one) {
          if (!(d0 == pl)) continue;
          x = nodes[i].x;
        } else {
          // y_i + m (x - x_i) = x + pL
          x = (pl - nodes[i].y + slopes[i] * nodes[i].x) / (slopes[i] - one);
          if (x < nodes[i].x || nodes[i + 1].x < x) continue;
        }
        if (x == end) x = c.s();
        std::int64_t pi = p.get_si();
        if (!best || pi < best->first || (pi == best->first && x < best->second)) best.emplace(pi, x);
      }
    }
    if (best) {
      std::int64_t g = std::gcd(best->first, static_cast<std::int64_t>(q));
      if (g == 0) g = 1;
      RationalRotation r{best->first / g, q / g, best->second};
      return r;
    }
  }
  return std::nullopt;
}

bool certificate_verifies(const CircleMap& c, const RationalRotation& r) {
  if (r.q < 1 || r.certificate_x < c.s() || !(r.certificate_x < c.sg())) return false;
  // The certificate point has period q' dividing the found period; walking
  // q steps must return exactly with p wraps.
  IterateResult it = iterate(c, r.certificate_x, r.q);
  return it.point == r.certificate_x && it.wraps == r.p;
}

RotationResult rotation_number(const CircleMap& c, const RotationBudget& budget) {
  if (budget.q_max < 1 || budget.n_max < 1) throw DomainError("rotation budget needs q_max >= 1 and n_max >= 1");
  std::vector<std::string> notes;
  if (auto r = symbolic_branch(c, notes)) return *r;

  if (auto r = find_periodic_orbit(c, budget.q_max, budget.node_budget, &notes)) {
    if (!certificate_verifies(c, *r)) throw Error("internal: periodic certificate failed to verify");
    return RotationResult{*r, "periodic", notes};
  }

  // Iteration: F^n(x) - x in [kL, (k+1)L) forces k/n <= rho <= (k+1)/n.
  const FieldContext& ctx = c.s().context();
  const FieldElement l = c.circumference();
  std::vector<FieldElement> bases{c.s()};
  std::mt19937_64 rng(budget.seed);
  for (int i = 0; i < budget.extra_base_points; ++i) {
    std::int64_t u = static_cast<std::int64_t>(rng() % 1024);
    bases.push_back(c.s() + FieldElement(ctx, Rational(u, 1024)) * l);
  }
  std::optional<RotationInterval> best;
  for (const auto& x0 : bases) {
    FieldElement p = x0;
    std::int64_t wraps = 0;
    std::int64_t n = 0;
    const FieldElement& s = c.s();
    const FieldElement& sg = c.sg();
    for (; n < budget.n_max; ++n) {
      if (p.bit_size() > kOrbitBitLimit) break;
      FieldElement y = c.lift().evaluate(p);
      if (y < sg && !(y < s)) {
        p = std::move(y);
      } else if (sg <= y && y < sg + l) {
        p = y - l;
        ++wraps;
      } else {
        mpz_class k = ((y - s) / l).floor();
        p = y - FieldElement(ctx, Rational(k)) * l;
        wraps += k.get_si();
      }
    }
    if (n == 0) continue;
    std::int64_t k = p < x0 ? wraps - 1 : wraps;
    if (n < budget.n_max) {
      notes.push_back("orbit of " + std::to_string(x0.approx()) + " stopped after " + std::to_string(n) +
                      " steps (coordinate size limit)");
    }
    RotationInterval iv{Rational(k, n), Rational(k + 1, n), n};
    if (!best) {
      best = iv;
    } else {
      // Keep the tightest intersection, labelled with the largest n used.
      best->lo = std::max(best->lo, iv.lo);
      best->hi = std::min(best->hi, iv.hi);
      best->n = std::max(best->n, iv.n);
    }
  }
  if (!best) throw ResourceLimit("rotation number: no orbit could be iterated within the coordinate size limit");
  return RotationResult{*best, "iteration", notes};
}

bool sandwich_contains(const RotationResult& rho, std::int64_t k, std::int64_t n) {
  if (n < 1) throw DomainError("sandwich needs n >= 1");
  const Rational lo(k, n), hi(k + 1, n);
  if (rho.is_rational()) {
    Rational v(rho.rational().p, rho.rational().q);
    return lo <= v && v <= hi;
  }
  if (rho.is_interval()) return rho.interval().lo <= hi && lo <= rho.interval().hi;
  const auto& sym = rho.irrational().value;
  if (const auto* v = std::get_if<FieldElement>(&sym)) {
    FieldElement flo(v->context(), lo), fhi(v->context(), hi);
    return flo <= *v && *v <= fhi;
  }
  // rho = ln a / ln b: k/n <= rho iff b^k <= a^n when b > 1 (reversed for b < 1).
  const auto& lr = std::get<LogRatio>(sym);
  const FieldElement one(lr.base.context(), Rational(1));
  bool b_gt_one = one < lr.base;
  FieldElement an = lr.argument.pow(n);
  FieldElement bk = lr.base.pow(k);
  FieldElement bk1 = bk * lr.base;
  if (b_gt_one) return bk <= an && an <= bk1;
  return an <= bk && bk1 <= an;
}

std::optional<FieldElement> rotation_as_field_element(const RotationResult& r, const FieldContext& ctx) {
  if (r.is_rational()) return FieldElement(ctx, Rational(r.rational().p, r.rational().q));
  if (r.is_irrational()) {
    if (const auto* v = std::get_if<FieldElement>(&r.irrational().value)) return *v;
  }
  return std::nullopt;
}

}  // namespace plrot
