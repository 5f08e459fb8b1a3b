#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plrot/groups.hpp"
#include "plrot/obstruction.hpp"

namespace plrot {

/// Obstruction the entry is known to carry.
struct ExpectedObstruction {
  std::string f;  ///< generator names of the pair
  std::string g;
  FieldElement s;
  Orientation orientation = Orientation::Forward;
  std::variant<FieldElement, LogRatio> rotation;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;  ///< argument literals, in order
  FieldContext field;
  RingSpec ring = RingSpec::all_rationals();
  GeneratorSystem generators;
  /// Generators that lie in the ring only after conjugation by t -> t + shift.
  std::vector<std::pair<std::string, FieldElement>> shifted;
  /// Generators defined as products of others; not ring-checked.
  std::vector<std::string> derived;
  std::optional<ExpectedObstruction> expected;
  std::vector<std::string> notes;

  /// `name` or `name(p1, p2)`.
  std::string display_name() const;
};

/// x0: (0,0), (1/4,1/2), (1/2,3/4), (1,1); x1: identity on [0,1/2] and a
/// half-size copy of x0 on [1/2,1].
CatalogEntry standard_F();

/// Cleary's pair f, g in F_tau (field Q(sqrt 5)).
CatalogEntry cleary_Ftau();

/// Generators f, g of F_{p,q} with slope p (resp. q) near 0. Throws
/// DomainError unless 1 < p < q and gcd(p, q) == 1.
CatalogEntry stein_Fpq(std::int64_t p, std::int64_t q);

/// Smallest n >= 1 with 2^-n < xi < 1 - 2^(2-n), or nullopt.
std::optional<int> translated_F_exponent(const FieldElement& xi);

/// f, g0, g1 and g = g0 g1 on the ambient interval [-1, 1]. Throws
/// DomainError unless 0 < xi < 1 and xi is irrational.
CatalogEntry translated_F(const FieldElement& xi);

struct CatalogInfo {
  std::string name;
  std::string signature;  ///< e.g. "stein_Fpq(p, q)"
  std::string summary;
};

std::vector<CatalogInfo> catalog_list();

/// Builds an entry by name; argument literals are parsed in `ctx` where
/// needed (translated_F). Throws DomainError for unknown names or bad
/// arguments.
CatalogEntry catalog_lookup(const std::string& name, const std::vector<std::string>& args, const FieldContext& ctx);

/// Checks every breakpoint and slope of every generator against the
/// entry's ring (after the recorded shift). Returns the first failure.
std::optional<std::string> catalog_ring_failure(const CatalogEntry& e);

}  // namespace plrot
