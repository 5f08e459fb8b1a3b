#include "plrot/serialize.hpp"

#include "plrot/literal.hpp"

namespace plrot {

using json = nlohmann::ordered_json;

std::string format_map(const PLMap& f) {
  std::string s = "pl { ambient = [" + format_number(f.lo()) + ", " + format_number(f.hi()) + "]; nodes = [";
  bool first = true;
  for (const auto& n : f.nodes()) {
    if (!first) s += ", ";
    first = false;
    s += "(" + format_number(n.x) + ", " + format_number(n.y) + ")";
  }
  return s + "] }";
}

std::string to_string(IrrationalityProof p) {
  return p == IrrationalityProof::QuadraticIrrational ? "quadratic-irrational" : "multiplicatively-independent";
}

std::string format_rotation_value(const RotationResult& r) {
  if (r.is_rational()) {
    const auto& q = r.rational();
    return q.q == 1 ? std::to_string(q.p) : std::to_string(q.p) + "/" + std::to_string(q.q);
  }
  if (r.is_interval()) return "[" + r.interval().lo.to_string() + ", " + r.interval().hi.to_string() + "]";
  const auto& v = r.irrational().value;
  if (const auto* x = std::get_if<FieldElement>(&v)) return format_number(*x);
  const auto& lr = std::get<LogRatio>(v);
  return "log(" + format_number(lr.argument) + ")/log(" + format_number(lr.base) + ")";
}

json to_json(const PLMap& f) {
  json nodes = json::array();
  for (const auto& n : f.nodes()) nodes.push_back({format_number(n.x), format_number(n.y)});
  return {{"field", f.context().to_string()},
          {"ambient", {format_number(f.lo()), format_number(f.hi())}},
          {"nodes", nodes},
          {"literal", format_map(f)}};
}

json to_json(const RotationBudget& b) {
  return {{"q_max", b.q_max}, {"n_max", b.n_max}, {"node_budget", b.node_budget}};
}

json to_json(const RotationResult& r) {
  json j = {{"kind", nullptr},        {"p", nullptr},  {"q", nullptr},  {"certificate_x", nullptr},
            {"value_literal", nullptr}, {"proof_tag", nullptr}, {"lo", nullptr}, {"hi", nullptr},
            {"n", nullptr}};
  if (r.is_rational()) {
    const auto& q = r.rational();
    j["kind"] = "rational";
    j["p"] = q.p;
    j["q"] = q.q;
    j["certificate_x"] = format_number(q.certificate_x);
    j["value_literal"] = format_rotation_value(r);
  } else if (r.is_irrational()) {
    j["kind"] = "irrational";
    j["value_literal"] = format_rotation_value(r);
    j["proof_tag"] = to_string(r.irrational().proof);
  } else {
    const auto& iv = r.interval();
    j["kind"] = "interval";
    j["lo"] = iv.lo.to_string();
    j["hi"] = iv.hi.to_string();
    j["n"] = iv.n;
  }
  return j;
}

json to_json(const ObstructionWitness& w, const RotationBudget& budget) {
  return {{"f", to_json(w.f)},
          {"g", to_json(w.g)},
          {"s", format_number(w.s)},
          {"orientation", to_string(w.orientation)},
          {"circle", {format_number(w.gamma.s()), format_number(w.gamma.sg())}},
          {"rotation", to_json(w.rotation)},
          {"budgets", to_json(budget)}};
}

json to_json(const ObstructionSearch& s, const RotationBudget& budget) {
  json outcomes = json::array();
  for (const auto& o : s.outcomes) {
    outcomes.push_back({{"s", format_number(o.s)},
                        {"orientation", o.orientation ? json(to_string(*o.orientation)) : json(nullptr)},
                        {"rotation", o.rotation ? to_json(*o.rotation) : json(nullptr)},
                        {"reason", o.reason}});
  }
  json j = {{"found", s.found()},
            {"candidates", s.candidates},
            {"outcomes", outcomes},
            {"budgets", to_json(budget)},
            {"witness", nullptr}};
  if (s.witness) j["witness"] = to_json(*s.witness, budget);
  return j;
}

json to_json(const CatalogEntry& e) {
  json gens = json::object();
  for (const auto& [name, m] : e.generators.generators()) gens[name] = to_json(m);
  json j = {{"name", e.name},
            {"params", e.params},
            {"field", e.field.to_string()},
            {"ring", e.ring.to_string()},
            {"generators", gens},
            {"notes", e.notes},
            {"expected", nullptr}};
  if (e.expected) {
    const auto& x = *e.expected;
    RotationResult r{SymbolicIrrational{x.rotation, std::holds_alternative<LogRatio>(x.rotation)
                                                        ? IrrationalityProof::MultiplicativelyIndependent
                                                        : IrrationalityProof::QuadraticIrrational},
                     "expected", {}};
    j["expected"] = {{"pair", {x.f, x.g}},
                     {"s", format_number(x.s)},
                     {"orientation", to_string(x.orientation)},
                     {"rotation", format_rotation_value(r)}};
  }
  return j;
}

}  // namespace plrot
