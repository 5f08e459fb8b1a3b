#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"
#include "plrot/catalog.hpp"
#include "plrot/error.hpp"
#include "plrot/literal.hpp"
#include "plrot/obstruction.hpp"

using namespace plrot;
using oracle::Q2;

namespace {

const FieldContext Q;

FieldElement n(std::int64_t a, std::int64_t b = 1) { return FieldElement(Q, Rational(a, b)); }
FieldElement tau(long k) { return FieldElement::tau().pow(k); }

PLMap map_q(std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Node> nodes;
  for (const auto& [x, y] : pts) nodes.push_back({FieldElement(Q, x), FieldElement(Q, y)});
  return PLMap(std::move(nodes));
}

/// x + xi and x + eta near 0 on the ambient [-1, 2].
std::pair<PLMap, PLMap> translations(Rational xi, Rational eta) {
  return {map_q({{-1, -1}, {0, xi}, {1, 1 + xi}, {2, 2}}), map_q({{-1, -1}, {0, eta}, {1, 1 + eta}, {2, 2}})};
}

/// gamma(x) by the case split.
FieldElement case_split(const PLMap& f, const PLMap& g, const FieldElement& sg, const FieldElement& x) {
  FieldElement xf = f.evaluate(x);
  return xf < sg ? xf : g.evaluate_inverse(xf);
}

struct Triple {
  PLMap f, g;
  FieldElement s;
};

/// Random (f, g, s) satisfying the precondition.
std::vector<Triple> random_triples(gen::Rng& rng, std::size_t want) {
  std::vector<Triple> out;
  for (int attempt = 0; out.size() < want && attempt < 20'000; ++attempt) {
    PLMap f = attempt % 3 == 0 ? gen::thompson(rng, 4) : gen::unit_map(rng, Q, 4, 16);
    PLMap g = attempt % 3 == 0 ? gen::thompson(rng, 4) : gen::unit_map(rng, Q, 4, 16);
    for (const auto& s : candidate_points(f, g)) {
      if (!gamma_precondition_failure(f, g, s)) {
        out.push_back({f, g, s});
        if (out.size() >= want) break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(BuildGamma, Examples) {
  CatalogEntry e = cleary_Ftau();
  CircleMap c = build_gamma(e.generators.at("f"), e.generators.at("g"), tau(-3));
  EXPECT_EQ(c.sg(), tau(-1) - tau(-4));

  auto [f, g] = translations(Rational(1, 10), Rational(2, 10));
  CircleMap t = build_gamma(f, g, n(0));
  EXPECT_EQ(t.circumference(), n(1, 5));
  for (int i = 0; i < 20; ++i) {
    FieldElement x = n(i, 100);
    FieldElement y = x + n(1, 10);
    EXPECT_EQ(t.apply(x), y < n(1, 5) ? y : y - n(1, 5));
  }
}

TEST(BuildGamma, NamesTheFailedInequality) {
  auto expect_failure = [](const PLMap& f, const PLMap& g, const FieldElement& s, const std::string& cond) {
    try {
      build_gamma(f, g, s);
      ADD_FAILURE() << "no error for " << cond;
    } catch (const PreconditionError& e) {
      EXPECT_EQ(e.condition(), cond);
    }
  };
  auto [f, g] = translations(Rational(1, 10), Rational(2, 10));
  expect_failure(invert(f), g, n(0), "s < sf");
  expect_failure(g, f, n(0), "sf <= sg");
  // sf g != sg f: g bends between sf and sfg
  PLMap bent = map_q({{-1, -1}, {0, Rational(2, 10)}, {Rational(1, 10), Rational(31, 100)}, {1, Rational(12, 10)}, {2, 2}});
  expect_failure(f, bent, n(0), "sfg == sgf");
  PLMap other = PLMap::identity(n(0), n(1));
  expect_failure(f, other, n(0), "f and g share an ambient interval");
  expect_failure(f, g, n(3), "s in ambient interval");
}

TEST(Iterate, Examples) {
  auto [f, g] = translations(Rational(1, 10), Rational(2, 10));
  CircleMap t = build_gamma(f, g, n(0));
  IterateResult z = iterate(t, n(1, 20), 0);
  EXPECT_EQ(z.point, n(1, 20));
  EXPECT_EQ(z.wraps, 0);
  IterateResult two = iterate(t, n(0), 2);
  EXPECT_EQ(two.point, n(0));
  EXPECT_EQ(two.wraps, 1);

  CatalogEntry e = cleary_Ftau();
  CircleMap c = build_gamma(e.generators.at("f"), e.generators.at("g"), tau(-3));
  // floor(10 tau^-1): largest k with k <= 10 tau^-1, decided in the oracle
  Q2 ten_rho = Q2(10, 0, 5) * Q2(mpq_class(-1, 2), mpq_class(1, 2), 5);
  std::int64_t k = 0;
  while (Q2(k + 1, 0, 5) <= ten_rho) ++k;
  EXPECT_EQ(k, 6);
  EXPECT_EQ(iterate(c, tau(-3), 10).wraps, k);
}

TEST(CircleMap, Distance) {
  auto [f, g] = translations(Rational(1, 10), Rational(2, 10));
  CircleMap t = build_gamma(f, g, n(0));
  EXPECT_EQ(t.distance(n(1, 100), n(19, 100)), n(2, 100));
  EXPECT_EQ(t.distance(n(19, 100), n(1, 100)), n(2, 100));
  EXPECT_EQ(t.distance(n(1, 100), n(5, 100)), n(4, 100));
}

TEST(RotationNumber, Examples) {
  CatalogEntry e = cleary_Ftau();
  RotationResult r = rotation_number(build_gamma(e.generators.at("f"), e.generators.at("g"), tau(-3)));
  ASSERT_TRUE(r.is_irrational());
  EXPECT_EQ(std::get<FieldElement>(r.irrational().value), tau(-1));
  EXPECT_EQ(r.irrational().proof, IrrationalityProof::QuadraticIrrational);

  auto [f, g] = translations(Rational(1, 10), Rational(2, 10));
  CircleMap t = build_gamma(f, g, n(0));
  RotationResult half = rotation_number(t);
  ASSERT_TRUE(half.is_rational());
  EXPECT_EQ(half.rational().p, 1);
  EXPECT_EQ(half.rational().q, 2);
  EXPECT_TRUE(certificate_verifies(t, half.rational()));

  CatalogEntry st = stein_Fpq(2, 3);
  RotationResult lg = rotation_number(build_gamma(st.generators.at("f"), st.generators.at("g"), n(1, 16)));
  ASSERT_TRUE(lg.is_irrational());
  const auto& lr = std::get<LogRatio>(lg.irrational().value);
  EXPECT_EQ(lr.base, n(3));
  EXPECT_EQ(lr.argument, n(2));
  EXPECT_EQ(lg.irrational().proof, IrrationalityProof::MultiplicativelyIndependent);
}

TEST(RotationNumber, GenericThompsonPairIsPeriodic) {
  CatalogEntry F = standard_F();
  const PLMap& x0 = F.generators.at("x0");
  const PLMap& x1 = F.generators.at("x1");
  PLMap a = compose(x0, x0), b = compose(compose(x0, x0), x1);
  std::size_t checked = 0;
  for (const auto& s : candidate_points(a, b)) {
    if (gamma_precondition_failure(a, b, s)) continue;
    CircleMap c = build_gamma(a, b, s);
    RotationResult r = rotation_number(c);
    ASSERT_TRUE(r.is_rational()) << format_number(s);
    const auto& rr = r.rational();
    EXPECT_LE(rr.q, 64);
    // periodic-orbit oracle: q steps of the case split return with p wraps
    FieldElement x = rr.certificate_x;
    std::int64_t wraps = 0;
    for (std::int64_t i = 0; i < rr.q; ++i) {
      FieldElement xf = a.evaluate(x);
      if (xf < c.sg()) {
        x = xf;
      } else {
        x = b.evaluate_inverse(xf);
        ++wraps;
      }
    }
    EXPECT_EQ(x, rr.certificate_x);
    EXPECT_EQ(wraps, rr.p);
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(RotationNumber, IntervalBranch) {
  CatalogEntry e = cleary_Ftau();
  CircleMap c = build_gamma(e.generators.at("f"), e.generators.at("g"), tau(-3));
  gen::Rng rng(41);
  PLMap h = gen::map(rng, c.s(), c.sg(), 3, 16);
  RotationBudget b;
  b.q_max = 2;
  b.n_max = 500;
  RotationResult r = rotation_number(c.conjugated(h), b);
  ASSERT_TRUE(r.is_interval());
  const auto& iv = r.interval();
  EXPECT_LE(iv.hi - iv.lo, Rational(1, iv.n));
  EXPECT_LE(FieldElement(e.field, iv.lo), tau(-1));
  EXPECT_LE(tau(-1), FieldElement(e.field, iv.hi));
}

TEST(DetectTranslation, Examples) {
  CatalogEntry e = cleary_Ftau();
  auto t = detect_translation_form(build_gamma(e.generators.at("f"), e.generators.at("g"), tau(-3)));
  ASSERT_TRUE(t);
  // tau^-2 - tau^-3 = tau^-4 and tau^-2 - tau^-4 = tau^-3
  EXPECT_TRUE(oracle::same(Q2::of(tau(-2)) - Q2::of(tau(-3)), t->xi));
  EXPECT_TRUE(oracle::same(Q2::of(tau(-2)) - Q2::of(tau(-4)), t->eta));
  EXPECT_EQ(t->xi / t->eta, tau(-1));

  CatalogEntry st = stein_Fpq(2, 3);
  EXPECT_FALSE(detect_translation_form(build_gamma(st.generators.at("f"), st.generators.at("g"), n(1, 16))));

  FieldContext r2(2);
  FieldElement xi = parse_number("sqrt(2)/2", r2);
  CatalogEntry tf = translated_F(xi);
  auto tt = detect_translation_form(build_gamma(tf.generators.at("f"), tf.generators.at("g"), FieldElement(r2, 0)));
  ASSERT_TRUE(tt);
  EXPECT_EQ(tt->xi, FieldElement(r2, Rational(1, 16)));
  EXPECT_EQ(tt->eta, (FieldElement(r2, 1) - xi) / FieldElement(r2, 2));
}

TEST(DetectScaling, Examples) {
  CatalogEntry st = stein_Fpq(2, 3);
  const PLMap& f = st.generators.at("f");
  const PLMap& g = st.generators.at("g");
  // 1/16 < 1/8 <= 3/16 < 3/8 = 3/8
  EXPECT_LT(n(1, 16), f.evaluate(n(1, 16)));
  EXPECT_EQ(f.evaluate(n(1, 16)), n(1, 8));
  EXPECT_EQ(g.evaluate(n(1, 16)), n(3, 16));
  EXPECT_EQ(g.evaluate(n(1, 8)), f.evaluate(n(3, 16)));
  auto sc = detect_scaling_form(build_gamma(f, g, n(1, 16)));
  ASSERT_TRUE(sc);
  EXPECT_EQ(sc->a, n(2));
  EXPECT_EQ(sc->b, n(3));
  EXPECT_EQ(sc->fixed, n(0));

  auto [tf, tg] = translations(Rational(1, 10), Rational(2, 10));
  EXPECT_FALSE(detect_scaling_form(build_gamma(tf, tg, n(0))));

  // f bends at 1/8, inside (s, sg), with sfg == sgf still holding
  PLMap f2 = map_q({{0, 0},
                    {Rational(1, 16), Rational(1, 8)},
                    {Rational(1, 8), Rational(3, 16)},
                    {Rational(3, 16), Rational(3, 8)},
                    {1, 1}});
  ASSERT_FALSE(gamma_precondition_failure(f2, g, n(1, 16)));
  EXPECT_FALSE(detect_scaling_form(build_gamma(f2, g, n(1, 16))));
}

TEST(CircleMapProperties, PiecesMatchCaseSplit) {
  gen::Rng rng(42);
  auto triples = random_triples(rng, 1000);
  ASSERT_EQ(triples.size(), 1000u);
  for (const auto& t : triples) {
    CircleMap c = build_gamma(t.f, t.g, t.s);
    auto nodes = c.lift().nodes();
    std::vector<FieldElement> pts;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      pts.push_back(nodes[i].x);
      pts.push_back((nodes[i].x + nodes[i + 1].x) / n(2));
    }
    for (const auto& x : pts) {
      ASSERT_EQ(c.apply(x), case_split(t.f, t.g, c.sg(), x)) << format_number(x);
    }
  }
}

TEST(CircleMapProperties, BijectiveAndCyclic) {
  gen::Rng rng(43);
  auto triples = random_triples(rng, 200);
  for (const auto& t : triples) {
    CircleMap c = build_gamma(t.f, t.g, t.s);
    // onto: the lift spans exactly one period, increasing
    auto nodes = c.lift().nodes();
    EXPECT_EQ(nodes.back().y - nodes.front().y, c.circumference());
    for (int i = 0; i < 5; ++i) {
      std::vector<FieldElement> p{gen::point(rng, c.s(), c.sg()), gen::point(rng, c.s(), c.sg()),
                                  gen::point(rng, c.s(), c.sg())};
      std::sort(p.begin(), p.end());
      if (p[0] == p[1] || p[1] == p[2]) continue;
      FieldElement a = c.apply(p[0]), b = c.apply(p[1]), d = c.apply(p[2]);
      // images in the same cyclic order: exactly one descent among a, b, d, a
      int descents = (b < a) + (d < b) + (a < d);
      EXPECT_EQ(descents, 1);
    }
  }
}

TEST(CircleMapProperties, PowerLaw) {
  gen::Rng rng(44);
  auto triples = random_triples(rng, 60);
  std::size_t checked = 0;
  for (const auto& t : triples) {
    CircleMap c = build_gamma(t.f, t.g, t.s);
    auto per = find_periodic_orbit(c, 64, 10'000);
    if (!per) continue;
    for (int m = 1; m <= 5; ++m) {
      IterateResult r = iterate(c.power(m), per->certificate_x, per->q);
      EXPECT_EQ(r.point, per->certificate_x);
      EXPECT_EQ(r.wraps, m * per->p);
    }
    ++checked;
  }
  EXPECT_GT(checked, 10u);
}

TEST(CircleMapProperties, IrrationalPairsDoNotCommute) {
  std::vector<CatalogEntry> entries{cleary_Ftau(), stein_Fpq(2, 3), stein_Fpq(3, 5),
                                    translated_F(parse_number("sqrt(2)/2", FieldContext(2)))};
  for (const auto& e : entries) {
    const PLMap& f = e.generators.at(e.expected->f);
    const PLMap& g = e.generators.at(e.expected->g);
    RotationResult r = rotation_number(build_gamma(f, g, e.expected->s));
    ASSERT_TRUE(r.is_irrational()) << e.display_name();
    EXPECT_FALSE(commutator(f, g).is_identity());
  }
}

TEST(CircleLift, ThenAndInverse) {
  gen::Rng rng(45);
  auto triples = random_triples(rng, 50);
  for (const auto& t : triples) {
    CircleMap c = build_gamma(t.f, t.g, t.s);
    CircleLift l = c.lift();
    CircleLift id = l.then(l.inverse());
    for (int i = 0; i < 5; ++i) {
      FieldElement x = gen::point(rng, c.s() - c.circumference(), c.sg() + c.circumference());
      EXPECT_EQ(id.evaluate(x), x);
      EXPECT_EQ(l.then(l).evaluate(x), l.evaluate(l.evaluate(x)));
      EXPECT_EQ(l.evaluate_inverse(l.evaluate(x)), x);
    }
  }
}
