#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plrot/plmap.hpp"

namespace plrot {

/// Lift of a PL circle homeomorphism of C = [s, s + L): an increasing PL map
/// F given on [s, s + L] with F(s + L) = F(s) + L, extended to the line by
/// F(x + kL) = F(x) + kL.
class CircleLift {
 public:
  /// Nodes must start at x = s and end at x = s + length with
  /// y_last = y_first + length; x and y strictly increasing.
  CircleLift(FieldElement s, FieldElement length, std::vector<Node> nodes);

  const FieldElement& origin() const noexcept { return s_; }
  const FieldElement& length() const noexcept { return length_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const FieldElement> slopes() const noexcept { return slopes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// F(x) for any real x.
  FieldElement evaluate(const FieldElement& x) const;
  /// F^{-1}(y) for any real y.
  FieldElement evaluate_inverse(const FieldElement& y) const;

  /// x -> next(F(x)): "this, then next".
  CircleLift then(const CircleLift& next) const;
  CircleLift inverse() const;

  friend bool operator==(const CircleLift& a, const CircleLift& b) { return a.nodes_ == b.nodes_; }

 private:
  struct Trusted {};
  CircleLift(FieldElement s, FieldElement length, std::vector<Node> nodes, Trusted);
  void canonicalize();
  /// floor((x - s) / L) and the reduced point x - kL in [s, s + L).
  std::pair<mpz_class, FieldElement> reduce(const FieldElement& x) const;

  FieldElement s_;
  FieldElement length_;
  std::vector<Node> nodes_;
  std::vector<FieldElement> slopes_;
};

/// The pair (f, g) a circle map was built from.
struct PairOrigin {
  PLMap f;
  PLMap g;
};

/// Which of the defining inequalities s < sf <= sg < s(fg) = s(gf) fails.
std::optional<std::string> gamma_precondition_failure(const PLMap& f, const PLMap& g, const FieldElement& s);

/// Circle map gamma on C = [s, sg): x -> xf if xf < sg, else x f g^{-1}.
class CircleMap {
 public:
  CircleMap(FieldElement s, FieldElement sg, CircleLift lift, std::optional<PairOrigin> origin = std::nullopt);

  const FieldElement& s() const noexcept { return s_; }
  const FieldElement& sg() const noexcept { return sg_; }
  FieldElement circumference() const { return sg_ - s_; }
  const CircleLift& lift() const noexcept { return lift_; }
  const std::optional<PairOrigin>& origin() const noexcept { return origin_; }

  /// gamma(x) for x in [s, sg).
  FieldElement apply(const FieldElement& x) const;

  /// Circle metric d(x, y) = min(|y - x|, L - |y - x|).
  FieldElement distance(const FieldElement& x, const FieldElement& y) const;

  /// h^{-1} gamma h for a PL map h of [s, sg] (h fixes both endpoints).
  CircleMap conjugated(const PLMap& h) const;
  /// gamma^m as a circle map, m >= 1.
  CircleMap power(int m) const;

 private:
  FieldElement s_;
  FieldElement sg_;
  CircleLift lift_;
  std::optional<PairOrigin> origin_;
};

/// Builds gamma for f modulo g at s. Throws PreconditionError naming the
/// failed inequality.
CircleMap build_gamma(const PLMap& f, const PLMap& g, const FieldElement& s);

struct IterateResult {
  FieldElement point;
  std::int64_t wraps;
};

/// n-fold image of x in [s, sg) and the number of times the orbit wrapped:
/// lift displacement = wraps * L + (point - x).
IterateResult iterate(const CircleMap& c, const FieldElement& x, std::int64_t n);

// ---------------------------------------------------------------------------
// Rotation numbers.

/// log_base(argument).
struct LogRatio {
  FieldElement base;
  FieldElement argument;
};

enum class IrrationalityProof { QuadraticIrrational, MultiplicativelyIndependent };

/// Lift rotation number p/q (reduced, 0 <= p <= q) with a periodic point:
/// gamma^q(x) = x after exactly p wraps.
struct RationalRotation {
  std::int64_t p = 0;
  std::int64_t q = 1;
  FieldElement certificate_x;
};

struct SymbolicIrrational {
  std::variant<FieldElement, LogRatio> value;
  IrrationalityProof proof;
};

/// lo <= rho <= hi from n iterations, hi - lo <= 1/n.
struct RotationInterval {
  Rational lo;
  Rational hi;
  std::int64_t n = 0;
};

struct RotationResult {
  std::variant<RationalRotation, SymbolicIrrational, RotationInterval> value;
  /// Which branch decided: "translation", "scaling", "periodic" or "iteration".
  std::string route;
  std::vector<std::string> notes;

  bool is_rational() const { return std::holds_alternative<RationalRotation>(value); }
  bool is_irrational() const { return std::holds_alternative<SymbolicIrrational>(value); }
  bool is_interval() const { return std::holds_alternative<RotationInterval>(value); }
  const RationalRotation& rational() const { return std::get<RationalRotation>(value); }
  const SymbolicIrrational& irrational() const { return std::get<SymbolicIrrational>(value); }
  const RotationInterval& interval() const { return std::get<RotationInterval>(value); }
};

struct RotationBudget {
  int q_max = 64;
  std::int64_t n_max = 1'000'000;
  std::size_t node_budget = 10'000;
  /// Extra random base points for the iteration branch.
  int extra_base_points = 3;
  std::uint64_t seed = 0x5eed;
};

struct TranslationForm {
  FieldElement xi;
  FieldElement eta;
};

/// f is x -> x + xi on [s, sg] and g is x -> x + eta on [s, sf] with
/// 0 < xi <= eta; then gamma is the rotation by xi of a circle of length eta.
std::optional<TranslationForm> detect_translation_form(const CircleMap& c);

struct ScalingForm {
  FieldElement a;      ///< slope of f
  FieldElement b;      ///< slope of g
  FieldElement fixed;  ///< common fixed point s0 of both affine pieces
};

/// f is x -> a(x - s0) + s0 on [s, sg] and g is x -> b(x - s0) + s0 on
/// [s, sf]; gamma is then a translation in log |x - s0| coordinates and its
/// rotation number is log_b(a).
std::optional<ScalingForm> detect_scaling_form(const CircleMap& c);

/// Symbolic shortcut, then periodic-orbit search up to q_max, then the
/// iteration interval after n_max steps.
RotationResult rotation_number(const CircleMap& c, const RotationBudget& budget = {});

/// Periodic-orbit search alone: smallest q <= q_max such that the lift of
/// gamma^q has a point with F^q(x) = x + pL.
std::optional<RationalRotation> find_periodic_orbit(const CircleMap& c, int q_max, std::size_t node_budget,
                                                    std::vector<std::string>* notes = nullptr);

/// Re-runs the q-fold iteration of a rational certificate.
bool certificate_verifies(const CircleMap& c, const RationalRotation& r);

/// Exact check of wraps/n <= rho <= (wraps + 1)/n against a symbolic or
/// rational value. For intervals, whether the two ranges intersect.
bool sandwich_contains(const RotationResult& rho, std::int64_t wraps, std::int64_t n);

/// Value of a rational or quadratic symbolic result as a field element.
std::optional<FieldElement> rotation_as_field_element(const RotationResult& r, const FieldContext& ctx);

}  // namespace plrot
