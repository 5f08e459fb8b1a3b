#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "plrot/catalog.hpp"
#include "plrot/literal.hpp"
#include "plrot/obstruction.hpp"
#include "plrot/serialize.hpp"

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

const ObstructionWitness& witness_of(const ObstructionCheck& c) { return std::get<ObstructionWitness>(c); }

}  // namespace

TEST(CheckObstructionAt, Ftau) {
  CatalogEntry e = cleary_Ftau();
  const PLMap& f = e.generators.at("f");
  const PLMap& g = e.generators.at("g");
  ObstructionCheck c = check_obstruction_at(f, g, tau(-3));
  ASSERT_TRUE(std::holds_alternative<ObstructionWitness>(c));
  const auto& w = witness_of(c);
  EXPECT_EQ(w.orientation, Orientation::Forward);
  EXPECT_EQ(std::get<FieldElement>(w.rotation.irrational().value), tau(-1));
  EXPECT_TRUE(verify_witness(w).ok);
}

TEST(CheckObstructionAt, PowerPairIsRationalHalf) {
  PLMap f = map_q({{0, 0}, {Rational(1, 2), Rational(3, 4)}, {1, 1}});
  PLMap f2 = compose(f, f);
  ObstructionCheck c = check_obstruction_at(f, f2, n(1, 4));
  ASSERT_TRUE(std::holds_alternative<NotAtS>(c));
  const auto& miss = std::get<NotAtS>(c);
  ASSERT_TRUE(miss.rotation);
  ASSERT_TRUE(miss.rotation->is_rational());
  EXPECT_EQ(miss.rotation->rational().p, 1);
  EXPECT_EQ(miss.rotation->rational().q, 2);
}

TEST(CheckObstructionAt, TranslatedF) {
  FieldContext r2(2);
  FieldElement xi = parse_number("sqrt(2)/2", r2);
  CatalogEntry e = translated_F(xi);
  ObstructionCheck c = check_obstruction_at(e.generators.at("f"), e.generators.at("g"), FieldElement(r2, 0));
  ASSERT_TRUE(std::holds_alternative<ObstructionWitness>(c));
  // rho = 2^(1-n) / (1 - xi) with n = 4, checked in the oracle field
  Q2 want = Q2(mpq_class(1, 8), 0, 2) / (Q2(1, 0, 2) - Q2::of(xi));
  EXPECT_TRUE(oracle::same(want, std::get<FieldElement>(witness_of(c).rotation.irrational().value)));
}

TEST(CheckObstructionAt, ReasonsForMisses) {
  CatalogEntry e = cleary_Ftau();
  const PLMap& f = e.generators.at("f");
  const PLMap& g = e.generators.at("g");
  auto reason = [](const ObstructionCheck& c) { return std::get<NotAtS>(c).reason; };
  EXPECT_EQ(reason(check_obstruction_at(f, g, FieldElement(e.field, 0))), "s is fixed by f");
  EXPECT_EQ(reason(check_obstruction_at(g, f, tau(-3))), "forward: sf <= sg fails");
  EXPECT_EQ(reason(check_obstruction_at(f, g, FieldElement(e.field, 2))), "s outside the ambient interval");
  EXPECT_EQ(reason(check_obstruction_at(f, g, n(1, 2))), "s lives in another field");
}

TEST(CheckObstructionAt, MirroredWitness) {
  CatalogEntry e = cleary_Ftau();
  const PLMap& f = e.generators.at("f");
  const PLMap& g = e.generators.at("g");
  PLMap fi = invert(f), gi = invert(g);
  FieldElement t = tau(-3);
  FieldElement s = g.evaluate(f.evaluate(t));
  // s > s f^-1 = tg >= s g^-1 = tf > t
  ObstructionCheck c = check_obstruction_at(fi, gi, s);
  ASSERT_TRUE(std::holds_alternative<ObstructionWitness>(c));
  const auto& w = witness_of(c);
  EXPECT_EQ(w.orientation, Orientation::Mirrored);
  EXPECT_EQ(w.gamma.s(), t);
  EXPECT_EQ(std::get<FieldElement>(w.rotation.irrational().value), tau(-1));
  EXPECT_TRUE(verify_witness(w).ok);
}

TEST(SearchObstruction, Examples) {
  CatalogEntry e = cleary_Ftau();
  ObstructionSearch s = search_obstruction(e.generators.at("f"), e.generators.at("g"));
  ASSERT_TRUE(s.found());
  EXPECT_TRUE(verify_witness(*s.witness).ok);
  EXPECT_EQ(s.outcomes.back().reason, "witness");

  CatalogEntry F = standard_F();
  ObstructionSearch miss = search_obstruction(F.generators.at("x0"), F.generators.at("x1"));
  EXPECT_FALSE(miss.found());
  EXPECT_GT(miss.candidates, 0u);

  PLMap f = map_q({{0, 0}, {Rational(1, 2), Rational(3, 4)}, {1, 1}});
  ObstructionSearch comm = search_obstruction(f, compose(f, f));
  EXPECT_FALSE(comm.found());
  EXPECT_EQ(comm.count_irrational(), 0u);
}

TEST(SearchObstruction, CandidatesSortedAndInterior) {
  CatalogEntry e = stein_Fpq(3, 5);
  const PLMap& f = e.generators.at("f");
  auto pts = candidate_points(f, e.generators.at("g"));
  ASSERT_FALSE(pts.empty());
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(pts[i - 1], pts[i]);
  EXPECT_LT(f.lo(), pts.front());
  EXPECT_LT(pts.back(), f.hi());
}

TEST(VerifyWitness, RejectsTamperedWitness) {
  CatalogEntry e = cleary_Ftau();
  auto w = witness_of(check_obstruction_at(e.generators.at("f"), e.generators.at("g"), tau(-3)));
  auto bad_value = w;
  std::get<SymbolicIrrational>(bad_value.rotation.value).value = tau(-2);
  WitnessVerification v = verify_witness(bad_value, 1000);
  EXPECT_FALSE(v.ok);
  EXPECT_NE(v.detail.find("sandwich"), std::string::npos);

  auto bad_orientation = w;
  bad_orientation.orientation = Orientation::Mirrored;
  EXPECT_FALSE(verify_witness(bad_orientation).ok);
}

// F has no obstruction: no search over short words may find one, and every
// computed rotation is rational or an interval.
TEST(SearchObstruction, DyadicSampleFindsNothing) {
  gen::Rng rng(61);
  std::size_t rotations = 0;
  for (int i = 0; i < 150; ++i) {
    PLMap a = gen::thompson(rng, 4);
    PLMap b = gen::thompson(rng, 4);
    if (a.is_identity() || b.is_identity()) continue;
    RotationBudget budget;
    budget.n_max = 20'000;
    ObstructionSearch s = search_obstruction(a, b, budget);
    ASSERT_FALSE(s.found()) << format_map(a) << " / " << format_map(b);
    for (const auto& o : s.outcomes) {
      ASSERT_TRUE(o.rotation);
      EXPECT_FALSE(o.rotation->is_irrational());
      ++rotations;
    }
  }
  EXPECT_GT(rotations, 50u);
}
