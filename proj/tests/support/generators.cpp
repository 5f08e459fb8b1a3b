#include "generators.hpp"

#include <algorithm>

#include "plrot/catalog.hpp"

namespace gen {

using plrot::FieldContext;
using plrot::FieldElement;
using plrot::Node;
using plrot::PLMap;
using plrot::Rational;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::int64_t> grid_points(Rng& rng, std::int64_t n, int k) {
  std::vector<std::int64_t> v;
  while (static_cast<int>(v.size()) < k && static_cast<std::int64_t>(v.size()) < n - 1) {
    std::int64_t x = uniform(rng, 1, n - 1);
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

PLMap map(Rng& rng, const FieldElement& lo, const FieldElement& hi, int max_inner, std::int64_t den, bool wobble) {
  const FieldContext& c = lo.context();
  int k = static_cast<int>(uniform(rng, 0, max_inner));
  auto xs = grid_points(rng, den, k);
  auto ys = grid_points(rng, den, k);
  const FieldElement len = hi - lo;
  // |unit| < 1/(4 den) keeps nudged grid points ordered and inside (lo, hi)
  FieldElement unit(c, Rational(0));
  if (wobble && !c.is_rational()) {
    FieldElement r = FieldElement::sqrt_d(c);
    FieldElement frac = r - FieldElement(c, Rational(r.floor()));
    unit = frac / FieldElement(c, Rational(8 * den));
  }
  std::vector<Node> nodes{{lo, lo}};
  for (int i = 0; i < k; ++i) {
    FieldElement x = lo + len * FieldElement(c, Rational(xs[i], den));
    FieldElement y = lo + len * FieldElement(c, Rational(ys[i], den));
    if (wobble) {
      x += len * unit * FieldElement(c, Rational(uniform(rng, -1, 1)));
      y += len * unit * FieldElement(c, Rational(uniform(rng, -1, 1)));
    }
    nodes.push_back({x, y});
  }
  nodes.push_back({hi, hi});
  return PLMap(std::move(nodes));
}

PLMap unit_map(Rng& rng, const FieldContext& ctx, int max_inner, std::int64_t den, bool wobble) {
  return map(rng, FieldElement(ctx, Rational(0)), FieldElement(ctx, Rational(1)), max_inner, den, wobble);
}

PLMap thompson(Rng& rng, int maxlen) {
  static const plrot::CatalogEntry F = plrot::standard_F();
  const PLMap& x0 = F.generators.at("x0");
  const PLMap& x1 = F.generators.at("x1");
  static const PLMap x0i = invert(x0), x1i = invert(x1);
  const PLMap* letters[] = {&x0, &x0i, &x1, &x1i};
  PLMap m = PLMap::identity(x0.lo(), x0.hi());
  int len = static_cast<int>(uniform(rng, 1, maxlen));
  for (int i = 0; i < len; ++i) m = compose(m, *letters[uniform(rng, 0, 3)]);
  return m;
}

FieldElement point(Rng& rng, const FieldElement& lo, const FieldElement& hi, std::int64_t den) {
  return lo + (hi - lo) * FieldElement(lo.context(), Rational(uniform(rng, 1, den - 1), den));
}

}  // namespace gen
