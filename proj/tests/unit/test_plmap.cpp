#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"
#include "plrot/catalog.hpp"
#include "plrot/error.hpp"
#include "plrot/literal.hpp"
#include "plrot/plmap.hpp"

using namespace plrot;
using oracle::Q2;

namespace {

const FieldContext Q;
const FieldContext R5(5);

FieldElement n(std::int64_t a, std::int64_t b = 1, const FieldContext& c = Q) { return FieldElement(c, Rational(a, b)); }

PLMap map_q(std::initializer_list<std::pair<Rational, Rational>> pts, const FieldContext& c = Q) {
  std::vector<Node> nodes;
  for (const auto& [x, y] : pts) nodes.push_back({FieldElement(c, x), FieldElement(c, y)});
  return PLMap(std::move(nodes));
}

FieldElement tau(long k) { return FieldElement::tau().pow(k); }

}  // namespace

TEST(PLMap, RejectsBadNodeLists) {
  EXPECT_THROW(map_q({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}, {1, 1}}), DomainError);
  EXPECT_THROW(map_q({{0, 0}, {Rational(1, 2), Rational(3, 4)}, {1, Rational(1, 2)}}), DomainError);
  EXPECT_THROW(map_q({{0, Rational(1, 8)}, {1, 1}}), DomainError);
}

TEST(PLMap, CanonicalFormDropsCollinearNodes) {
  PLMap f = map_q({{0, 0}, {Rational(1, 4), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}, {1, 1}});
  PLMap g = map_q({{0, 0}, {Rational(1, 8), Rational(1, 8)}, {Rational(1, 4), Rational(1, 4)},
                   {Rational(1, 2), Rational(3, 4)}, {1, 1}});
  EXPECT_EQ(f, g);
  EXPECT_EQ(f.node_count(), 4u);
  EXPECT_EQ(PLMap(std::vector<Node>(f.nodes().begin(), f.nodes().end())), f);
}

TEST(Evaluate, Examples) {
  CatalogEntry e = cleary_Ftau();
  EXPECT_EQ(e.generators.at("f").evaluate(tau(-3)), tau(-2));
  PLMap id = PLMap::identity(n(0), n(1));
  EXPECT_EQ(id.evaluate(n(3, 7)), n(3, 7));
  FieldContext r2(2);
  CatalogEntry t = translated_F(parse_number("sqrt(2)/2", r2));
  EXPECT_EQ(t.generators.at("f").evaluate(FieldElement(r2, 0)), FieldElement(r2, Rational(1, 16)));
  EXPECT_THROW(id.evaluate(n(2)), DomainError);
}

TEST(Compose, Examples) {
  gen::Rng rng(21);
  PLMap f = gen::unit_map(rng, Q, 4);
  PLMap id = PLMap::identity(f.lo(), f.hi());
  EXPECT_EQ(compose(f, id), f);
  EXPECT_TRUE(compose(f, invert(f)).is_identity());

  CatalogEntry F = standard_F();
  const PLMap& x0 = F.generators.at("x0");
  const PLMap& x1 = F.generators.at("x1");
  PLMap x0x1 = compose(x0, x1);
  oracle::Map o0 = oracle::Map::of(x0), o1 = oracle::Map::of(x1);
  EXPECT_TRUE(oracle::same(o1(o0(Q2::of(n(15, 16)))), x0x1.evaluate(n(15, 16))));
  for (int i = 1; i < 1000; ++i) {
    FieldElement x = n(i, 1000);
    ASSERT_TRUE(oracle::same(o1(o0(Q2::of(x))), x0x1.evaluate(x))) << i;
  }
  PLMap other = PLMap::identity(n(-1), n(1));
  EXPECT_THROW(compose(f, other), DomainError);
}

TEST(Compose, BreakpointsComeFromFactors) {
  gen::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    PLMap f = gen::unit_map(rng, Q, 4), g = gen::unit_map(rng, Q, 4);
    PLMap fg = compose(f, g);
    std::vector<FieldElement> allowed = f.breakpoints();
    for (const auto& b : g.breakpoints()) allowed.push_back(f.evaluate_inverse(b));
    for (const auto& b : fg.breakpoints()) {
      EXPECT_NE(std::find(allowed.begin(), allowed.end(), b), allowed.end());
    }
  }
}

TEST(Invert, Examples) {
  PLMap id = PLMap::identity(n(0), n(1));
  EXPECT_EQ(invert(id), id);
  gen::Rng rng(23);
  PLMap f = gen::unit_map(rng, R5, 4, 32, true);
  EXPECT_EQ(invert(invert(f)), f);
  EXPECT_EQ(invert(cleary_Ftau().generators.at("f")).evaluate(tau(-2)), tau(-3));
}

TEST(GroupOps, Examples) {
  CatalogEntry e = cleary_Ftau();
  const PLMap& f = e.generators.at("f");
  const PLMap& g = e.generators.at("g");
  EXPECT_TRUE(group_ops(f, f, GroupOpKind::Commutator).is_identity());
  // supt(f^g) = supt(f) g
  IntervalSet lhs = support(group_ops(f, g, GroupOpKind::Conjugate));
  EXPECT_EQ(lhs, support(f).image(g));
  // f^2 at tau^-3 is f applied twice
  EXPECT_EQ(group_ops(f, f, GroupOpKind::Power, 2).evaluate(tau(-3)), f.evaluate(f.evaluate(tau(-3))));
  EXPECT_EQ(power(f, -2), invert(compose(f, f)));
  EXPECT_TRUE(power(f, 0).is_identity());
}

TEST(Support, Examples) {
  EXPECT_TRUE(support(PLMap::identity(n(0), n(1))).empty());
  FieldContext r2(2);
  CatalogEntry t = translated_F(parse_number("sqrt(2)/2", r2));
  IntervalSet s = support(t.generators.at("g0"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.intervals()[0].lo, FieldElement(r2, 0));
  EXPECT_EQ(s.intervals()[0].hi, FieldElement(r2, 1));
  // x1: node-by-node crossing oracle
  CatalogEntry F = standard_F();
  const PLMap& x1 = F.generators.at("x1");
  auto expected = oracle::support(oracle::Map::of(x1));
  ASSERT_EQ(expected.size(), 1u);
  EXPECT_TRUE(oracle::same(expected[0].first, n(1, 2)));
  EXPECT_TRUE(oracle::same(expected[0].second, n(1)));
  ASSERT_EQ(support(x1).size(), 1u);
  EXPECT_EQ(support(x1).intervals()[0].lo, n(1, 2));
}

TEST(Support, CrossingInsideASegment) {
  // y - x changes sign between the nodes at 1/4 and 3/4
  PLMap g = map_q({{0, 0}, {Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), Rational(5, 8)}, {1, 1}});
  auto o = oracle::support(oracle::Map::of(g));
  IntervalSet s = support(g);
  ASSERT_EQ(s.size(), o.size());
  for (std::size_t i = 0; i < o.size(); ++i) {
    EXPECT_TRUE(oracle::same(o[i].first, s.intervals()[i].lo));
    EXPECT_TRUE(oracle::same(o[i].second, s.intervals()[i].hi));
  }
  auto orbs = orbitals(g);
  ASSERT_EQ(orbs.size(), 2u);
  EXPECT_EQ(orbs[0].direction, 1);
  EXPECT_EQ(orbs[1].direction, -1);
}

TEST(GroupSupport, Examples) {
  std::vector<PLMap> ids{PLMap::identity(n(0), n(1))};
  EXPECT_TRUE(group_support(ids).empty());
  CatalogEntry e = cleary_Ftau();
  std::vector<PLMap> fg = e.generators.maps();
  IntervalSet s = group_support(fg);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.intervals()[0].lo, FieldElement(R5, 0));
  EXPECT_EQ(s.intervals()[0].hi, FieldElement(R5, 1));
  // bumps on (0, 1/4) and (1/2, 1) stay apart
  std::vector<PLMap> bumps{map_q({{0, 0}, {Rational(1, 8), Rational(3, 16)}, {Rational(1, 4), Rational(1, 4)}, {1, 1}}),
                           map_q({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(3, 4), Rational(7, 8)}, {1, 1}})};
  IntervalSet b = group_support(bumps);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.intervals()[0].hi, n(1, 4));
  EXPECT_EQ(b.intervals()[1].lo, n(1, 2));
}

TEST(Project, Examples) {
  PLMap two = map_q({{0, 0},
                     {Rational(1, 8), Rational(3, 16)},
                     {Rational(1, 4), Rational(1, 4)},
                     {Rational(1, 2), Rational(1, 2)},
                     {Rational(3, 4), Rational(7, 8)},
                     {1, 1}});
  EXPECT_EQ(project(two, support(two)), two);
  EXPECT_TRUE(project(two, IntervalSet()).is_identity());
  IntervalSet left({OpenInterval{n(0), n(1, 4)}});
  PLMap l = project(two, left);
  for (int i = 0; i <= 64; ++i) {
    FieldElement x = n(i, 64);
    EXPECT_EQ(l.evaluate(x), x < n(1, 4) ? two.evaluate(x) : x);
  }
  IntervalSet cut({OpenInterval{n(0), n(1, 8)}});
  EXPECT_THROW(project(two, cut), DomainError);
}

TEST(Rescale, TranslatedAndRescaledMaps) {
  gen::Rng rng(24);
  PLMap f = gen::unit_map(rng, Q, 4);
  PLMap t = f.translated(n(1, 3));
  EXPECT_EQ(t.lo(), n(1, 3));
  EXPECT_EQ(t.evaluate(n(1, 2) + n(1, 3)), f.evaluate(n(1, 2)) + n(1, 3));
  PLMap r = f.rescaled(n(-1), n(1));
  EXPECT_EQ(r.evaluate(n(0)), f.evaluate(n(1, 2)) * n(2) - n(1));
}
