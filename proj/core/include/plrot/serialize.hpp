#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "plrot/catalog.hpp"
#include "plrot/obstruction.hpp"

namespace plrot {

/// `pl { ambient = [lo, hi]; nodes = [(x0, y0), ...] }`, readable by the
/// session parser.
std::string format_map(const PLMap& f);

/// `p/q`, a field literal, or `log(a)/log(b)`.
std::string format_rotation_value(const RotationResult& r);
std::string to_string(IrrationalityProof p);

nlohmann::ordered_json to_json(const PLMap& f);
nlohmann::ordered_json to_json(const RotationBudget& b);
/// {kind, p, q, certificate_x, value_literal, proof_tag, lo, hi, n}; fields
/// that do not apply to the kind are null.
nlohmann::ordered_json to_json(const RotationResult& r);
nlohmann::ordered_json to_json(const ObstructionWitness& w, const RotationBudget& budget);
nlohmann::ordered_json to_json(const ObstructionSearch& s, const RotationBudget& budget);
nlohmann::ordered_json to_json(const CatalogEntry& e);

}  // namespace plrot
