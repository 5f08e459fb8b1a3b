#include "plrot/catalog.hpp"

#include <algorithm>

#include "plrot/error.hpp"
#include "plrot/literal.hpp"

namespace plrot {

namespace {

FieldElement q(const FieldContext& ctx, std::int64_t n, std::int64_t d = 1) { return FieldElement(ctx, Rational(n, d)); }

Rational pow2(int e) { return Rational(2).pow(e); }

PLMap map_of(const FieldContext& ctx, std::initializer_list<std::pair<Rational, Rational>> pts) {
  std::vector<Node> nodes;
  for (const auto& [x, y] : pts) nodes.push_back({FieldElement(ctx, x), FieldElement(ctx, y)});
  return PLMap(std::move(nodes));
}

}  // namespace

std::string CatalogEntry::display_name() const {
  if (params.empty()) return name;
  std::string s = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? ", " : "") + params[i];
  return s + ")";
}

CatalogEntry standard_F() {
  CatalogEntry e;
  e.name = "standard_F";
  e.field = FieldContext::rationals();
  e.ring = RingSpec::dyadic();
  const FieldContext& c = e.field;
  e.generators.add("x0", map_of(c, {{0, 0}, {Rational(1, 4), Rational(1, 2)}, {Rational(1, 2), Rational(3, 4)}, {1, 1}}));
  e.generators.add("x1", map_of(c, {{0, 0},
                                    {Rational(1, 2), Rational(1, 2)},
                                    {Rational(5, 8), Rational(3, 4)},
                                    {Rational(3, 4), Rational(7, 8)},
                                    {1, 1}}));
  e.notes.push_back("generator choice is one of many; any pair generating F would do");
  return e;
}

CatalogEntry cleary_Ftau() {
  CatalogEntry e;
  e.name = "cleary_Ftau";
  e.field = FieldContext::golden();
  e.ring = RingSpec::golden();
  const FieldContext& c = e.field;
  const FieldElement t = FieldElement::tau();
  auto tp = [&](long k) { return t.pow(k); };
  const FieldElement zero = q(c, 0), one = q(c, 1);
  // Pieces: x tau on [0, tau^-3], x + tau^-2 - tau^-3 up to tau^-1, x tau^-1 + tau^-2 after.
  PLMap f({{zero, zero}, {tp(-3), tp(-3) * t}, {tp(-1), tp(-1) + tp(-2) - tp(-3)}, {one, one}});
  // Pieces: x tau^2 on [0, tau^-4], x + tau^-2 - tau^-4 up to tau^-1, x tau^-2 + tau^-1 after.
  PLMap g({{zero, zero}, {tp(-4), tp(-4) * tp(2)}, {tp(-1), tp(-1) + tp(-2) - tp(-4)}, {one, one}});
  e.generators.add("f", std::move(f));
  e.generators.add("g", std::move(g));
  e.expected = ExpectedObstruction{"f", "g", tp(-3), Orientation::Forward, tp(-1)};
  return e;
}

CatalogEntry stein_Fpq(std::int64_t p, std::int64_t qq) {
  RingSpec ring = RingSpec::stein(p, qq);  // validates 1 < p < q coprime
  CatalogEntry e;
  e.name = "stein_Fpq";
  e.params = {std::to_string(p), std::to_string(qq)};
  e.field = FieldContext::rationals();
  e.ring = ring;
  const FieldContext& c = e.field;

  auto one_break = [&](std::int64_t m) -> std::optional<PLMap> {
    FieldElement x = q(c, 1, m + 1);
    FieldElement y = q(c, m, m + 1);
    if (!ring_member(x, ring, RingRole::Breakpoint) || !ring_member(y, ring, RingRole::Breakpoint)) return std::nullopt;
    return PLMap({{q(c, 0), q(c, 0)}, {x, y}, {q(c, 1), q(c, 1)}});
  };
  // Slopes m, 1, 1/m with breakpoints m^-2 and 1 - 1/m.
  auto two_break = [&](std::int64_t m) {
    FieldElement u = q(c, 1, m * m);
    FieldElement v = q(c, m - 1, m);
    return PLMap({{q(c, 0), q(c, 0)}, {u, q(c, 1, m)}, {v, v + q(c, m - 1) * u}, {q(c, 1), q(c, 1)}});
  };
  auto fp = one_break(p);
  auto gq = one_break(qq);
  bool simple = fp && gq;
  PLMap f = simple ? *fp : two_break(p);
  PLMap g = simple ? *gq : two_break(qq);
  // Both maps are linear through 0 on [0, u]; s with s q <= u_f and s p <= u_g
  // keeps sf, sg and s(fg) inside the linear pieces.
  FieldElement uf = f.breakpoints().front();
  FieldElement ug = g.breakpoints().front();
  FieldElement s = q(c, 1);
  while (!(s * q(c, qq) <= uf && s * q(c, p) <= ug)) s = s / q(c, simple ? 2 : p * qq);
  e.generators.add("f", std::move(f));
  e.generators.add("g", std::move(g));
  e.expected = ExpectedObstruction{"f", "g", s, Orientation::Forward, LogRatio{q(c, qq), q(c, p)}};
  e.notes.push_back(simple ? "one breakpoint at 1/(p+1) and 1/(q+1)"
                           : "1/(p+1) is not in Z[1/p,1/q]; generators use slopes m, 1, 1/m with breakpoints "
                             "m^-2 and 1 - 1/m");
  return e;
}

std::optional<int> translated_F_exponent(const FieldElement& xi) {
  const FieldContext& c = xi.context();
  for (int n = 1; n <= 64; ++n) {
    FieldElement lo(c, pow2(-n));
    FieldElement hi(c, Rational(1) - pow2(2 - n));
    if (lo < xi && xi < hi) return n;
  }
  return std::nullopt;
}

CatalogEntry translated_F(const FieldElement& xi) {
  const FieldContext& c = xi.context();
  if (!(q(c, 0) < xi) || !(xi < q(c, 1))) throw DomainError("translated_F needs 0 < xi < 1");
  if (xi.is_rational()) throw DomainError("translated_F needs an irrational xi");
  auto n_opt = translated_F_exponent(xi);
  if (!n_opt) throw DomainError("no n with 2^-n < xi < 1 - 2^(2-n)");
  const int n = *n_opt;
  auto d = [&](int e) { return FieldElement(c, pow2(e)); };
  const FieldElement m1 = q(c, -1), zero = q(c, 0), half = q(c, 1, 2), one = q(c, 1);

  CatalogEntry e;
  e.name = "translated_F";
  e.params = {format_number(xi)};
  e.field = c;
  e.ring = RingSpec::dyadic();
  PLMap f({{m1, m1},
           {-xi, -xi},
           {d(-n) - xi, d(1 - n) - xi},
           {one - d(1 - n) - xi, one - d(-n) - xi},
           {one - xi, one - xi},
           {one, one}});
  PLMap g0({{m1, m1}, {zero, zero}, {half - d(-n - 1), one - d(-n)}, {half, one - d(-n - 1)}, {one, one}});
  PLMap g1({{m1, m1},
            {-xi, -xi},
            {d(-n - 1) - xi, half - xi},
            {d(-n) - xi, d(-n - 1) + half - xi},
            {one - xi, one - xi},
            {one, one}});
  PLMap g = compose(g0, g1);
  e.generators.add("f", std::move(f));
  e.generators.add("g0", std::move(g0));
  e.generators.add("g1", std::move(g1));
  e.generators.add("g", std::move(g));
  // f and g1 are supported on [-xi, 1 - xi]; shifting by xi gives dyadic data.
  e.shifted = {{"f", xi}, {"g1", xi}};
  e.derived = {"g"};
  e.expected = ExpectedObstruction{"f", "g", zero, Orientation::Forward, d(1 - n) / (one - xi)};
  e.notes.push_back("n = " + std::to_string(n) + "; ambient [-1, 1], maps are the identity off [-xi, 1]");
  return e;
}

std::vector<CatalogInfo> catalog_list() {
  return {
      {"standard_F", "standard_F", "Thompson's group F: generators x0, x1"},
      {"cleary_Ftau", "cleary_Ftau", "Cleary's golden ratio group: obstruction pair f, g (field sqrt(5))"},
      {"stein_Fpq", "stein_Fpq(p, q)", "Stein's group F_{p,q}: f with slope p and g with slope q near 0"},
      {"translated_F", "translated_F(xi)", "F together with its translate by xi: f, g0, g1 and g = g0 g1"},
  };
}

CatalogEntry catalog_lookup(const std::string& name, const std::vector<std::string>& args, const FieldContext& ctx) {
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      throw DomainError("catalog entry '" + name + "' takes " + std::to_string(k) + " argument(s), got " +
                        std::to_string(args.size()));
    }
  };
  auto integer = [&](const std::string& s) -> std::int64_t {
    Rational r = Rational::parse(s);
    if (!r.is_integer() || !r.numerator().fits_slong_p()) throw DomainError("expected an integer, got '" + s + "'");
    return r.numerator().get_si();
  };
  if (name == "standard_F") {
    want(0);
    return standard_F();
  }
  if (name == "cleary_Ftau") {
    want(0);
    return cleary_Ftau();
  }
  if (name == "stein_Fpq") {
    want(2);
    return stein_Fpq(integer(args[0]), integer(args[1]));
  }
  if (name == "translated_F") {
    want(1);
    return translated_F(parse_number(args[0], ctx));
  }
  throw DomainError("unknown catalog entry '" + name + "'");
}

std::optional<std::string> catalog_ring_failure(const CatalogEntry& e) {
  for (const auto& [name, map] : e.generators.generators()) {
    if (std::find(e.derived.begin(), e.derived.end(), name) != e.derived.end()) continue;
    PLMap m = map;
    for (const auto& [sname, shift] : e.shifted) {
      if (sname == name) m = map.translated(shift);
    }
    for (const auto& node : m.nodes().subspan(1, m.node_count() - 2)) {
      if (!ring_member(node.x, e.ring, RingRole::Breakpoint) || !ring_member(node.y, e.ring, RingRole::Breakpoint)) {
        return name + ": node (" + format_number(node.x) + ", " + format_number(node.y) + ") outside " +
               e.ring.to_string();
      }
    }
    for (const auto& sl : m.slopes()) {
      if (!ring_member(sl, e.ring, RingRole::Slope)) {
        return name + ": slope " + format_number(sl) + " outside " + e.ring.to_string();
      }
    }
  }
  return std::nullopt;
}

}  // namespace plrot
