#include "plrot/circlemap.hpp"

#include <algorithm>

#include "plrot/error.hpp"

namespace plrot {

namespace {

FieldElement from_mpz(const FieldContext& ctx, const mpz_class& k) { return FieldElement(ctx, Rational(k)); }

FieldElement from_int(const FieldContext& ctx, std::int64_t k) { return FieldElement(ctx, Rational(k)); }

}  // namespace

// ---------------------------------------------------------------------------
// CircleLift

CircleLift::CircleLift(FieldElement s, FieldElement length, std::vector<Node> nodes)
    : s_(std::move(s)), length_(std::move(length)), nodes_(std::move(nodes)) {
  if (length_.sign() <= 0) throw DomainError("circle length must be positive");
  if (nodes_.size() < 2) throw DomainError("a circle lift needs at least two nodes");
  if (!(nodes_.front().x == s_) || !(nodes_.back().x == s_ + length_)) {
    throw DomainError("circle lift nodes must span exactly one period");
  }
  if (!(nodes_.back().y == nodes_.front().y + length_)) throw DomainError("circle lift must commute with the period");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1].x < nodes_[i].x) || !(nodes_[i - 1].y < nodes_[i].y)) {
      throw DomainError("circle lift nodes must be strictly increasing");
    }
  }
  canonicalize();
}

CircleLift::CircleLift(FieldElement s, FieldElement length, std::vector<Node> nodes, Trusted)
    : s_(std::move(s)), length_(std::move(length)), nodes_(std::move(nodes)) {
  canonicalize();
}

void CircleLift::canonicalize() {
  auto slope = [](const Node& a, const Node& b) { return (b.y - a.y) / (b.x - a.x); };
  std::vector<Node> out;
  out.reserve(nodes_.size());
  out.push_back(nodes_.front());
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) {
    if (slope(out.back(), nodes_[i]) == slope(nodes_[i], nodes_[i + 1])) continue;
    out.push_back(nodes_[i]);
  }
  out.push_back(nodes_.back());
  nodes_ = std::move(out);
  slopes_.clear();
  slopes_.reserve(nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) slopes_.push_back(slope(nodes_[i], nodes_[i + 1]));
}

std::pair<mpz_class, FieldElement> CircleLift::reduce(const FieldElement& x) const {
  const FieldElement end = s_ + length_;
  if (s_ <= x && x < end) return {mpz_class(0), x};
  if (end <= x && x < end + length_) return {mpz_class(1), x - length_};
  mpz_class k = ((x - s_) / length_).floor();
  return {k, x - from_mpz(s_.context(), k) * length_};
}

FieldElement CircleLift::evaluate(const FieldElement& x) const {
  auto [k, r] = reduce(x);
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r, [](const FieldElement& v, const Node& n) {
    return v < n.x;
  });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (i + 1 >= nodes_.size()) i = nodes_.size() - 2;
  FieldElement y = nodes_[i].y + slopes_[i] * (r - nodes_[i].x);
  if (k != 0) y += from_mpz(s_.context(), k) * length_;
  return y;
}

FieldElement CircleLift::evaluate_inverse(const FieldElement& y) const {
  const FieldElement& y0 = nodes_.front().y;
  mpz_class k;
  FieldElement r = y;
  if (y0 <= y && y < y0 + length_) {
    k = 0;
  } else {
    k = ((y - y0) / length_).floor();
    r = y - from_mpz(s_.context(), k) * length_;
  }
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r, [](const FieldElement& v, const Node& n) {
    return v < n.y;
  });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (i + 1 >= nodes_.size()) i = nodes_.size() - 2;
  FieldElement x = nodes_[i].x + (r - nodes_[i].y) / slopes_[i];
  if (k != 0) x += from_mpz(s_.context(), k) * length_;
  return x;
}

CircleLift CircleLift::then(const CircleLift& next) const {
  if (!(s_ == next.s_) || !(length_ == next.length_)) throw DomainError("circle lifts live on different circles");
  const FieldContext& ctx = s_.context();
  const FieldElement& y0 = nodes_.front().y;
  const FieldElement y1 = y0 + length_;
  std::vector<FieldElement> xs;
  xs.reserve(nodes_.size() + next.nodes_.size());
  for (const auto& n : nodes_) xs.push_back(n.x);
  for (std::size_t j = 0; j + 1 < next.nodes_.size(); ++j) {
    const FieldElement& u = next.nodes_[j].x;
    mpz_class k = ((y0 - u) / length_).floor() + 1;
    FieldElement v = u + from_mpz(ctx, k) * length_;
    if (v == y1) continue;
    xs.push_back(evaluate_inverse(v));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (auto& x : xs) {
    FieldElement y = next.evaluate(evaluate(x));
    nodes.push_back({std::move(x), std::move(y)});
  }
  return CircleLift(s_, length_, std::move(nodes), Trusted{});
}

CircleLift CircleLift::inverse() const {
  const FieldContext& ctx = s_.context();
  const FieldElement end = s_ + length_;
  std::vector<FieldElement> ys{s_, end};
  for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
    const FieldElement& y = nodes_[j].y;
    mpz_class k = ((s_ - y) / length_).floor() + 1;
    FieldElement v = y + from_mpz(ctx, k) * length_;
    if (v == end) v = s_;
    ys.push_back(std::move(v));
  }
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<Node> nodes;
  nodes.reserve(ys.size());
  for (auto& y : ys) {
    FieldElement x = evaluate_inverse(y);
    nodes.push_back({std::move(y), std::move(x)});
  }
  return CircleLift(s_, length_, std::move(nodes), Trusted{});
}

// ---------------------------------------------------------------------------
// CircleMap

std::optional<std::string> gamma_precondition_failure(const PLMap& f, const PLMap& g, const FieldElement& s) {
  if (!(f.lo() == g.lo()) || !(f.hi() == g.hi())) return "f and g share an ambient interval";
  if (s < f.lo() || f.hi() < s) return "s in ambient interval";
  FieldElement sf = f.evaluate(s);
  FieldElement sg = g.evaluate(s);
  if (!(s < sf)) return "s < sf";
  if (!(sf <= sg)) return "sf <= sg";
  FieldElement sfg = g.evaluate(sf);
  FieldElement sgf = f.evaluate(sg);
  if (!(sg < sfg)) return "sg < sfg";
  if (!(sfg == sgf)) return "sfg == sgf";
  return std::nullopt;
}

CircleMap::CircleMap(FieldElement s, FieldElement sg, CircleLift lift, std::optional<PairOrigin> origin)
    : s_(std::move(s)), sg_(std::move(sg)), lift_(std::move(lift)), origin_(std::move(origin)) {
  if (!(lift_.origin() == s_) || !(lift_.length() == sg_ - s_)) throw DomainError("lift does not match the circle");
}

FieldElement CircleMap::apply(const FieldElement& x) const {
  if (x < s_ || !(x < sg_)) throw DomainError("point outside the circle [s, sg)");
  FieldElement y = lift_.evaluate(x);
  const FieldElement l = circumference();
  if (y < sg_ && !(y < s_)) return y;
  if (sg_ <= y && y < sg_ + l) return y - l;
  mpz_class k = ((y - s_) / l).floor();
  return y - from_mpz(s_.context(), k) * l;
}

FieldElement CircleMap::distance(const FieldElement& x, const FieldElement& y) const {
  FieldElement d = (y - x).abs();
  FieldElement other = circumference() - d;
  return other < d ? other : d;
}

CircleMap CircleMap::conjugated(const PLMap& h) const {
  if (!(h.lo() == s_) || !(h.hi() == sg_)) throw DomainError("conjugator must be a PL map of [s, sg]");
  std::vector<Node> nodes(h.nodes().begin(), h.nodes().end());
  CircleLift hl(s_, circumference(), std::move(nodes));
  return CircleMap(s_, sg_, hl.inverse().then(lift_).then(hl));
}

CircleMap CircleMap::power(int m) const {
  if (m < 1) throw DomainError("circle map power must be positive");
  CircleLift acc = lift_;
  for (int i = 1; i < m; ++i) acc = acc.then(lift_);
  return CircleMap(s_, sg_, std::move(acc));
}

CircleMap build_gamma(const PLMap& f, const PLMap& g, const FieldElement& s) {
  if (auto failed = gamma_precondition_failure(f, g, s)) {
    throw PreconditionError(*failed, "circle map precondition fails: " + *failed);
  }
  const FieldElement sf = f.evaluate(s);
  const FieldElement sg = g.evaluate(s);
  const FieldElement l = sg - s;
  const FieldElement wrap = f.evaluate_inverse(sg);  // s <= wrap < sg

  std::vector<FieldElement> xs{s, wrap, sg};
  for (const auto& b : f.breakpoints()) {
    if (s < b && b < sg) xs.push_back(b);
  }
  // Kinks of g^{-1} on [sg, sg f] pulled back through f.
  const FieldElement sgf = f.evaluate(sg);
  for (const auto& n : g.nodes()) {
    if (sg < n.y && n.y < sgf) xs.push_back(f.evaluate_inverse(n.y));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (auto& x : xs) {
    FieldElement xf = f.evaluate(x);
    FieldElement y = xf < sg ? xf : g.evaluate_inverse(xf) + l;
    nodes.push_back({std::move(x), std::move(y)});
  }
  // F(s) = sf in either branch: at sf == sg the second branch gives s + l.
  (void)sf;
  return CircleMap(s, sg, CircleLift(s, l, std::move(nodes)), PairOrigin{f, g});
}

IterateResult iterate(const CircleMap& c, const FieldElement& x, std::int64_t n) {
  if (x < c.s() || !(x < c.sg())) throw DomainError("point outside the circle [s, sg)");
  if (n < 0) throw DomainError("negative iteration count");
  const FieldElement l = c.circumference();
  const FieldElement& s = c.s();
  const FieldElement& sg = c.sg();
  const FieldContext& ctx = s.context();
  FieldElement p = x;
  std::int64_t wraps = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    FieldElement y = c.lift().evaluate(p);
    if (y < sg && !(y < s)) {
      p = std::move(y);
    } else if (sg <= y && y < sg + l) {
      p = y - l;
      ++wraps;
    } else {
      mpz_class k = ((y - s) / l).floor();
      p = y - from_mpz(ctx, k) * l;
      wraps += k.get_si();
    }
  }
  return {std::move(p), wraps};
}

// ---------------------------------------------------------------------------
// Symbolic forms

namespace {

/// f is affine on [a, b] (no breakpoint strictly inside).
bool affine_on(const PLMap& f, const FieldElement& a, const FieldElement& b) {
  for (const auto& n : f.nodes()) {
    if (a < n.x && n.x < b) return false;
  }
  return true;
}

struct Pieces {
  FieldElement sf;
  FieldElement a;  // slope of f on [s, sg]
  FieldElement b;  // slope of g on [s, sf]
};

std::optional<Pieces> affine_pieces(const CircleMap& c) {
  if (!c.origin()) return std::nullopt;
  const PLMap& f = c.origin()->f;
  const PLMap& g = c.origin()->g;
  const FieldElement& s = c.s();
  FieldElement sf = f.evaluate(s);
  if (!affine_on(f, s, c.sg()) || !affine_on(g, s, sf)) return std::nullopt;
  return Pieces{std::move(sf), f.slope_at(s), g.slope_at(s)};
}

}  // namespace

std::optional<TranslationForm> detect_translation_form(const CircleMap& c) {
  auto p = affine_pieces(c);
  if (!p) return std::nullopt;
  const FieldElement one = from_int(c.s().context(), 1);
  if (!(p->a == one) || !(p->b == one)) return std::nullopt;
  return TranslationForm{p->sf - c.s(), c.sg() - c.s()};
}

std::optional<ScalingForm> detect_scaling_form(const CircleMap& c) {
  auto p = affine_pieces(c);
  if (!p) return std::nullopt;
  const FieldElement& s = c.s();
  const FieldElement one = from_int(s.context(), 1);
  if (p->a == one || p->b == one) return std::nullopt;
  // x -> a x + c fixes c / (1 - a).
  FieldElement s0 = (p->sf - p->a * s) / (one - p->a);
  if (!((c.sg() - p->b * s) / (one - p->b) == s0)) return std::nullopt;
  return ScalingForm{p->a, p->b, s0};
}

}  // namespace plrot
