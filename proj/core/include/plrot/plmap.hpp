#pragma once

#include <span>
#include <vector>

#include "plrot/field.hpp"

namespace plrot {

struct Node {
  FieldElement x;
  FieldElement y;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Open interval (lo, hi) with lo < hi.
struct OpenInterval {
  FieldElement lo;
  FieldElement hi;

  bool contains(const FieldElement& t) const { return lo < t && t < hi; }
  bool overlaps(const OpenInterval& o) const { return lo < o.hi && o.lo < hi; }
  bool contains(const OpenInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

class PLMap;

/// Sorted list of pairwise disjoint open intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Validates that the intervals are non-empty, sorted and disjoint.
  explicit IntervalSet(std::vector<OpenInterval> intervals);
  /// Union of arbitrary open intervals; overlapping ones are merged, ones
  /// that merely share an endpoint are kept apart (the endpoint is excluded).
  static IntervalSet union_of(std::vector<OpenInterval> intervals);

  std::span<const OpenInterval> intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }

  bool contains(const FieldElement& t) const;
  bool intersects(const OpenInterval& j) const;
  /// Interval of this set containing j entirely, if any.
  const OpenInterval* enclosing(const OpenInterval& j) const;
  /// Image under an orientation preserving map.
  IntervalSet image(const PLMap& f) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<OpenInterval> intervals_;
};

/// Orientation-preserving piecewise-linear homeomorphism of [lo, hi], stored
/// as its graph: nodes (x_i, y_i) with x and y strictly increasing, first node
/// (lo, lo), last node (hi, hi). Canonical: no interior node is collinear
/// with its neighbours, so equality of maps is equality of node lists.
///
/// Maps act on the right: compose(f, g) is "f then g", x(fg) = (xf)g.
class PLMap {
 public:
  /// Validates and canonicalizes; rejects unsorted or non-monotone nodes.
  explicit PLMap(std::vector<Node> nodes);

  static PLMap identity(const FieldElement& lo, const FieldElement& hi);
  /// Builds a map from (x, slope) pieces: starting at (lo, lo) the graph
  /// follows each slope until the next x; the last piece must end at (hi, hi).
  static PLMap from_slopes(const FieldElement& lo, const FieldElement& hi,
                           std::span<const std::pair<FieldElement, FieldElement>> pieces);

  const FieldElement& lo() const noexcept { return nodes_.front().x; }
  const FieldElement& hi() const noexcept { return nodes_.back().x; }
  const FieldContext& context() const noexcept { return nodes_.front().x.context(); }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const FieldElement> slopes() const noexcept { return slopes_; }
  /// Interior nodes' x coordinates.
  std::vector<FieldElement> breakpoints() const;

  bool is_identity() const noexcept { return nodes_.size() == 2; }

  /// Index of the segment [x_i, x_{i+1}] used to evaluate at x.
  std::size_t segment_of(const FieldElement& x) const;
  /// Slope to the right of x (left of hi for x == hi).
  const FieldElement& slope_at(const FieldElement& x) const { return slopes_[segment_of(x)]; }

  /// xf for lo <= x <= hi; throws DomainError otherwise.
  FieldElement evaluate(const FieldElement& x) const;
  /// x f^{-1}.
  FieldElement evaluate_inverse(const FieldElement& y) const;

  /// The same map with every coordinate moved to another field (rational
  /// coordinates only).
  PLMap in_context(FieldContext ctx) const;
  /// Conjugate by the increasing affine bijection [lo, hi] -> [new_lo, new_hi].
  PLMap rescaled(const FieldElement& new_lo, const FieldElement& new_hi) const;
  /// Conjugate by the translation t -> t + shift (ambient moves too).
  PLMap translated(const FieldElement& shift) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.nodes_ == b.nodes_; }

 private:
  struct Trusted {};
  PLMap(std::vector<Node> nodes, Trusted);
  void canonicalize();
  void compute_slopes();

  std::vector<Node> nodes_;
  std::vector<FieldElement> slopes_;

  friend PLMap compose(const PLMap& f, const PLMap& g);
  friend PLMap invert(const PLMap& f);
  friend PLMap project(const PLMap& f, const IntervalSet& x);
};

/// x(fg) = (xf)g. Throws DomainError on ambient mismatch.
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
/// f^g = g^{-1} f g.
PLMap conjugate(const PLMap& f, const PLMap& g);
/// [f, g] = f^{-1} g^{-1} f g.
PLMap commutator(const PLMap& f, const PLMap& g);
PLMap power(const PLMap& f, long n);

inline PLMap operator*(const PLMap& f, const PLMap& g) { return compose(f, g); }

enum class GroupOpKind { Conjugate, Commutator, Power };
/// Dispatcher over conjugate (f^g), commutator ([f,g]) and power (f^n).
PLMap group_ops(const PLMap& f, const PLMap& g, GroupOpKind kind, long n = 1);

/// A component of the support together with the direction f moves it.
struct Orbital {
  OpenInterval interval;
  int direction;  // +1: xf > x on the interval, -1: xf < x
};

std::vector<Orbital> orbitals(const PLMap& f);
/// supt(f) = { x : xf != x }, as maximal open intervals.
IntervalSet support(const PLMap& f);
/// Support of the group generated by `gens`; its components are the orbitals.
IntervalSet group_support(std::span<const PLMap> gens);
/// f on X, identity elsewhere. X must not cut through an orbital of f.
PLMap project(const PLMap& f, const IntervalSet& x);

}  // namespace plrot
