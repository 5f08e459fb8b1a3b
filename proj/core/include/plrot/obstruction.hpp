#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plrot/circlemap.hpp"

namespace plrot {

enum class Orientation { Forward, Mirrored };

std::string to_string(Orientation o);

/// (f, g) is an F-obstruction at s. Forward: rotation of f mod g at s is
/// irrational. Mirrored: s > sf >= sg > s(fg) = s(gf) and the rotation of
/// f^-1 mod g^-1 at s(fg) is irrational.
struct ObstructionWitness {
  PLMap f;
  PLMap g;
  FieldElement s;
  Orientation orientation;
  RotationResult rotation;
  CircleMap gamma;
};

struct NotAtS {
  std::string reason;
  std::optional<RotationResult> rotation;
};

using ObstructionCheck = std::variant<ObstructionWitness, NotAtS>;

/// Tries the forward orientation, then the mirrored one.
ObstructionCheck check_obstruction_at(const PLMap& f, const PLMap& g, const FieldElement& s,
                                      const RotationBudget& budget = {});

/// Candidate witness points in ascending order: breakpoints of f, g, fg and
/// gf, their images under f, g and their inverses, orbital endpoints, and
/// midpoints of consecutive candidates.
std::vector<FieldElement> candidate_points(const PLMap& f, const PLMap& g);

struct CandidateOutcome {
  FieldElement s;
  std::optional<Orientation> orientation;  ///< set when a precondition held
  std::optional<RotationResult> rotation;
  std::string reason;
};

struct ObstructionSearch {
  std::optional<ObstructionWitness> witness;
  std::vector<CandidateOutcome> outcomes;
  std::size_t candidates = 0;

  bool found() const noexcept { return witness.has_value(); }
  std::size_t count_rational() const;
  std::size_t count_interval() const;
  std::size_t count_irrational() const;
};

/// Runs check_obstruction_at on every candidate in ascending order; the
/// first witness wins. A miss is a bounded-search verdict.
ObstructionSearch search_obstruction(const PLMap& f, const PLMap& g, const RotationBudget& budget = {});

struct WitnessVerification {
  bool ok = false;
  std::string detail;
};

/// Re-checks a witness without the lift machinery: preconditions, the
/// orientation reduction, orbit iteration straight from the definition of
/// gamma with the wrap sandwich against the symbolic value for n up to
/// `max_n`, and that f and g do not commute.
WitnessVerification verify_witness(const ObstructionWitness& w, std::int64_t max_n = 10'000);

}  // namespace plrot
