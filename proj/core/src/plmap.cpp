#include "plrot/plmap.hpp"

#include <algorithm>

#include "plrot/error.hpp"

namespace plrot {

// ---------------------------------------------------------------------------
// IntervalSet

IntervalSet::IntervalSet(std::vector<OpenInterval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (!(intervals_[i].lo < intervals_[i].hi)) throw DomainError("empty open interval in IntervalSet");
    if (i > 0 && intervals_[i].lo < intervals_[i - 1].hi) {
      throw DomainError("IntervalSet intervals must be sorted and disjoint");
    }
  }
}

IntervalSet IntervalSet::union_of(std::vector<OpenInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
  std::vector<OpenInterval> out;
  for (auto& iv : intervals) {
    if (!(iv.lo < iv.hi)) continue;
    if (!out.empty() && iv.lo < out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return IntervalSet(std::move(out));
}

bool IntervalSet::contains(const FieldElement& t) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const OpenInterval& iv) { return iv.contains(t); });
}

bool IntervalSet::intersects(const OpenInterval& j) const {
  return std::any_of(intervals_.begin(), intervals_.end(), [&](const OpenInterval& iv) { return iv.overlaps(j); });
}

const OpenInterval* IntervalSet::enclosing(const OpenInterval& j) const {
  for (const auto& iv : intervals_) {
    if (iv.contains(j)) return &iv;
  }
  return nullptr;
}

IntervalSet IntervalSet::image(const PLMap& f) const {
  std::vector<OpenInterval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({f.evaluate(iv.lo), f.evaluate(iv.hi)});
  return IntervalSet(std::move(out));
}

// ---------------------------------------------------------------------------
// PLMap

PLMap::PLMap(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw DomainError("a PL map needs at least two nodes");
  const FieldContext ctx = nodes_.front().x.context();
  for (const auto& n : nodes_) {
    if (!(n.x.context() == ctx) || !(n.y.context() == ctx)) throw ContextMismatch("PL map nodes mix fields");
  }
  if (!(nodes_.front().x == nodes_.front().y) || !(nodes_.back().x == nodes_.back().y)) {
    throw DomainError("first and last nodes must lie on the diagonal (fix the ambient endpoints)");
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1].x < nodes_[i].x)) throw DomainError("node x coordinates must be strictly increasing");
    if (!(nodes_[i - 1].y < nodes_[i].y)) throw DomainError("node y coordinates must be strictly increasing");
  }
  canonicalize();
}

PLMap::PLMap(std::vector<Node> nodes, Trusted) : nodes_(std::move(nodes)) { canonicalize(); }

void PLMap::compute_slopes() {
  slopes_.clear();
  slopes_.reserve(nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    slopes_.push_back((nodes_[i + 1].y - nodes_[i].y) / (nodes_[i + 1].x - nodes_[i].x));
  }
}

void PLMap::canonicalize() {
  compute_slopes();
  std::vector<Node> kept;
  std::vector<FieldElement> kept_slopes;
  kept.reserve(nodes_.size());
  kept.push_back(nodes_.front());
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) {
    if (slopes_[i - 1] == slopes_[i]) continue;
    kept_slopes.push_back(slopes_[i - 1]);
    kept.push_back(nodes_[i]);
  }
  kept_slopes.push_back(slopes_.back());
  kept.push_back(nodes_.back());
  nodes_ = std::move(kept);
  slopes_ = std::move(kept_slopes);
}

PLMap PLMap::identity(const FieldElement& lo, const FieldElement& hi) {
  if (!(lo < hi)) throw DomainError("ambient interval must have lo < hi");
  return PLMap({{lo, lo}, {hi, hi}});
}

PLMap PLMap::from_slopes(const FieldElement& lo, const FieldElement& hi,
                         std::span<const std::pair<FieldElement, FieldElement>> pieces) {
  std::vector<Node> nodes{{lo, lo}};
  for (const auto& [end, slope] : pieces) {
    const Node& last = nodes.back();
    nodes.push_back({end, last.y + slope * (end - last.x)});
  }
  if (!(nodes.back().x == hi) || !(nodes.back().y == hi)) {
    throw DomainError("slope pieces do not end at (hi, hi)");
  }
  return PLMap(std::move(nodes));
}

std::vector<FieldElement> PLMap::breakpoints() const {
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) out.push_back(nodes_[i].x);
  return out;
}

std::size_t PLMap::segment_of(const FieldElement& x) const {
  auto it = std::upper_bound(nodes_.begin() + 1, nodes_.end() - 1, x,
                             [](const FieldElement& v, const Node& n) { return v < n.x; });
  return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

FieldElement PLMap::evaluate(const FieldElement& x) const {
  if (x < lo() || hi() < x) throw DomainError("point outside the ambient interval");
  std::size_t i = segment_of(x);
  if (x == nodes_[i].x) return nodes_[i].y;
  return nodes_[i].y + slopes_[i] * (x - nodes_[i].x);
}

FieldElement PLMap::evaluate_inverse(const FieldElement& y) const {
  if (y < lo() || hi() < y) throw DomainError("point outside the ambient interval");
  auto it = std::upper_bound(nodes_.begin() + 1, nodes_.end() - 1, y,
                             [](const FieldElement& v, const Node& n) { return v < n.y; });
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (y == nodes_[i].y) return nodes_[i].x;
  return nodes_[i].x + (y - nodes_[i].y) / slopes_[i];
}

PLMap PLMap::in_context(FieldContext ctx) const {
  std::vector<Node> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back({n.x.in_context(ctx), n.y.in_context(ctx)});
  return PLMap(std::move(out), Trusted{});
}

PLMap PLMap::rescaled(const FieldElement& new_lo, const FieldElement& new_hi) const {
  if (!(new_lo < new_hi)) throw DomainError("rescaled ambient must have lo < hi");
  FieldElement scale = (new_hi - new_lo) / (hi() - lo());
  auto map = [&](const FieldElement& t) { return new_lo + (t - lo()) * scale; };
  std::vector<Node> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back({map(n.x), map(n.y)});
  return PLMap(std::move(out), Trusted{});
}

PLMap PLMap::translated(const FieldElement& shift) const {
  std::vector<Node> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back({n.x + shift, n.y + shift});
  return PLMap(std::move(out), Trusted{});
}

// ---------------------------------------------------------------------------
// Group operations

namespace {

void require_same_ambient(const PLMap& f, const PLMap& g) {
  if (!(f.context() == g.context())) throw ContextMismatch("maps live in different fields");
  if (!(f.lo() == g.lo()) || !(f.hi() == g.hi())) throw DomainError("maps have different ambient intervals");
}

}  // namespace

PLMap compose(const PLMap& f, const PLMap& g) {
  require_same_ambient(f, g);
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  auto fn = f.nodes();
  auto gn = g.nodes();

  // Breakpoints of fg: those of f, plus preimages under f of those of g.
  // Each candidate carries (x, xf) so g is applied to a known value.
  std::vector<Node> out;
  out.reserve(fn.size() + gn.size());
  std::size_t i = 0;         // next f node
  std::size_t j = 1;         // next interior g node
  std::size_t fseg = 0;      // f segment for inverse lookups
  std::size_t gseg = 0;      // g segment for forward evaluation
  auto apply_g = [&](const FieldElement& y) {
    while (gseg + 1 < gn.size() - 1 && gn[gseg + 1].x <= y) ++gseg;
    if (y == gn[gseg].x) return gn[gseg].y;
    return gn[gseg].y + g.slopes()[gseg] * (y - gn[gseg].x);
  };
  while (i < fn.size() || j + 1 < gn.size()) {
    bool take_g = false;
    if (j + 1 < gn.size()) {
      take_g = i >= fn.size() || gn[j].x < fn[i].y;
    }
    if (take_g) {
      const FieldElement& u = gn[j].x;
      while (fseg + 1 < fn.size() - 1 && fn[fseg + 1].y <= u) ++fseg;
      FieldElement x = fn[fseg].x + (u - fn[fseg].y) / f.slopes()[fseg];
      out.push_back({std::move(x), gn[j].y});
      ++j;
    } else {
      if (j + 1 < gn.size() && gn[j].x == fn[i].y) {
        out.push_back({fn[i].x, gn[j].y});
        ++j;
      } else {
        out.push_back({fn[i].x, apply_g(fn[i].y)});
      }
      ++i;
    }
  }
  return PLMap(std::move(out), PLMap::Trusted{});
}

PLMap invert(const PLMap& f) {
  std::vector<Node> out;
  out.reserve(f.nodes_.size());
  for (const auto& n : f.nodes_) out.push_back({n.y, n.x});
  return PLMap(std::move(out), PLMap::Trusted{});
}

PLMap conjugate(const PLMap& f, const PLMap& g) { return compose(compose(invert(g), f), g); }

PLMap commutator(const PLMap& f, const PLMap& g) {
  return compose(compose(invert(f), invert(g)), compose(f, g));
}

PLMap power(const PLMap& f, long n) {
  PLMap base = n < 0 ? invert(f) : f;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  PLMap result = PLMap::identity(f.lo(), f.hi());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

PLMap group_ops(const PLMap& f, const PLMap& g, GroupOpKind kind, long n) {
  switch (kind) {
    case GroupOpKind::Conjugate: return conjugate(f, g);
    case GroupOpKind::Commutator: return commutator(f, g);
    case GroupOpKind::Power: return power(f, n);
  }
  throw DomainError("unknown group operation");
}

// ---------------------------------------------------------------------------
// Supports

std::vector<Orbital> orbitals(const PLMap& f) {
  auto nodes = f.nodes();
  // Closed components of the fixed-point set, in order.
  std::vector<std::pair<FieldElement, FieldElement>> fixed;
  auto add = [&](const FieldElement& l, const FieldElement& r) {
    if (!fixed.empty() && l <= fixed.back().second) {
      if (fixed.back().second < r) fixed.back().second = r;
    } else {
      fixed.emplace_back(l, r);
    }
  };
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    FieldElement d0 = nodes[i].y - nodes[i].x;
    FieldElement d1 = nodes[i + 1].y - nodes[i + 1].x;
    int s0 = d0.sign();
    int s1 = d1.sign();
    if (s0 == 0) add(nodes[i].x, nodes[i].x);
    if (s0 == 0 && s1 == 0) add(nodes[i].x, nodes[i + 1].x);
    if (s0 * s1 < 0) {
      FieldElement t = nodes[i].x + d0 * (nodes[i + 1].x - nodes[i].x) / (d0 - d1);
      add(t, t);
    }
  }
  add(f.hi(), f.hi());

  std::vector<Orbital> out;
  for (std::size_t k = 0; k + 1 < fixed.size(); ++k) {
    const FieldElement& a = fixed[k].second;
    const FieldElement& b = fixed[k + 1].first;
    FieldElement mid = (a + b) / FieldElement(a.context(), 2);
    out.push_back({{a, b}, (f.evaluate(mid) - mid).sign()});
  }
  return out;
}

IntervalSet support(const PLMap& f) {
  std::vector<OpenInterval> out;
  for (auto& o : orbitals(f)) out.push_back(std::move(o.interval));
  return IntervalSet(std::move(out));
}

IntervalSet group_support(std::span<const PLMap> gens) {
  std::vector<OpenInterval> all;
  for (const auto& g : gens) {
    for (auto& o : orbitals(g)) all.push_back(std::move(o.interval));
  }
  return IntervalSet::union_of(std::move(all));
}

PLMap project(const PLMap& f, const IntervalSet& x) {
  std::vector<Node> out{f.nodes().front()};
  auto push = [&](const Node& n) {
    if (out.back().x < n.x) out.push_back(n);
  };
  for (const auto& orb : orbitals(f)) {
    const OpenInterval& o = orb.interval;
    if (x.enclosing(o) == nullptr) {
      if (x.intersects(o)) throw DomainError("projection set cuts through an orbital of the map");
      continue;
    }
    push({o.lo, o.lo});
    for (const auto& n : f.nodes()) {
      if (o.lo < n.x && n.x < o.hi) push(n);
    }
    push({o.hi, o.hi});
  }
  push(f.nodes().back());
  return PLMap(std::move(out), PLMap::Trusted{});
}

}  // namespace plrot
