#include "commands.hpp"

#include <iostream>

#include <nlohmann/json.hpp>

#include "paper_suite.hpp"
#include "plrot/catalog.hpp"
#include "plrot/error.hpp"
#include "plrot/literal.hpp"
#include "plrot/serialize.hpp"
#include "session.hpp"

namespace plrot::cli {

namespace {

using json = nlohmann::ordered_json;

std::string field_decl(const FieldContext& c) { return c.is_rational() ? "rational" : "sqrt(" + std::to_string(c.d()) + ")"; }

std::string with_decimal(const FieldElement& x) {
  if (x.is_rational() && x.rational_part().is_integer()) return format_number(x);
  return format_number(x) + " ≈ " + x.to_decimal(40);
}

std::string rotation_line(const RotationResult& r) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RationalRotation>) {
          return "rational: " + format_rotation_value(r) + ", period " + std::to_string(v.q) + " certificate";
        } else if constexpr (std::is_same_v<T, SymbolicIrrational>) {
          const char* tag = v.proof == IrrationalityProof::QuadraticIrrational ? "quadratic" : "multiplicatively independent";
          return "irrational: " + format_rotation_value(r) + " (" + tag + ")";
        } else {
          return "undecided: rotation in " + format_rotation_value(r) + " after " + std::to_string(v.n) + " iterations";
        }
      },
      r.value);
}

void print_rotation(std::ostream& out, const RotationResult& r) {
  out << rotation_line(r) << "\n";
  if (r.is_rational()) {
    const auto& rr = r.rational();
    out << "certificate: x = " << format_number(rr.certificate_x) << " returns after " << rr.q << " steps and "
        << rr.p << " wraps\n";
  }
  out << "route: " << r.route << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
}

std::pair<PLMap, PLMap> pair_of(const Session& s, const std::string& f, const std::string& g) {
  return {s.evaluate(f), s.evaluate(g)};
}

void print_witness(std::ostream& out, const ObstructionWitness& w) {
  out << "witness: s = " << format_number(w.s) << " (" << to_string(w.orientation) << ")\n";
  out << "circle: [" << format_number(w.gamma.s()) << ", " << format_number(w.gamma.sg()) << ")\n";
  print_rotation(out, w.rotation);
}

/// Runs `body`, mapping library errors to exit code 2.
template <class F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const PreconditionError& e) {
    io.err << "error: precondition fails: " << e.condition() << "\n";
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
  }
  return kError;
}

json search_json(const SearchResult& r) {
  json j;
  j["found"] = r.found();
  j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  j["words_examined"] = r.words_examined;
  j["pruned"] = r.pruned;
  j["warnings"] = r.warnings;
  return j;
}

int report_search(const SearchResult& r, const Session& s, const Options& o, Streams io, json extra = json::object()) {
  if (o.json) {
    json j = search_json(r);
    for (auto& [k, v] : extra.items()) j[k] = v;
    io.out << j.dump(2) << "\n";
  } else {
    if (r.found()) {
      io.out << "found: " << r.witness->to_string() << "\n";
      io.out << "map: " << format_map(word_evaluate(s.maps, *r.witness)) << "\n";
    } else {
      io.out << "not found among words of length <= " << o.maxlen << "\n";
    }
    io.out << "words examined: " << r.words_examined << ", pruned: " << r.pruned << "\n";
    for (const auto& [k, v] : extra.items()) io.out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& w : r.warnings) io.out << "warning: " << w << "\n";
  }
  return r.found() ? kFound : kNotFound;
}

SearchOptions search_options(const Options& o) {
  SearchOptions so;
  so.maxlen = o.maxlen;
  so.node_budget = o.budget.node_budget;
  return so;
}

}  // namespace

int cmd_eval(const std::string& file, const std::string& word, const std::string& x, const Options& o, Streams io) {
  return guarded(io, [&] {
    Session s = load_session(file);
    PLMap m = s.evaluate(word);
    FieldElement v = m.evaluate(s.number(x));
    if (o.json) {
      json j;
      j["word"] = s.word(word).to_string();
      j["x"] = format_number(s.number(x));
      j["value_literal"] = format_number(v);
      j["decimal"] = v.to_decimal(40);
      io.out << j.dump(2) << "\n";
    } else {
      io.out << with_decimal(v) << "\n";
    }
    return kFound;
  });
}

int cmd_rotnum(const std::string& file, const std::string& f, const std::string& g, const std::string& s,
               const Options& o, Streams io) {
  return guarded(io, [&] {
    Session ses = load_session(file);
    auto [fm, gm] = pair_of(ses, f, g);
    CircleMap gamma = build_gamma(fm, gm, ses.number(s));
    RotationResult r = rotation_number(gamma, o.budget);
    if (o.json) {
      io.out << to_json(r).dump(2) << "\n";
    } else {
      print_rotation(io.out, r);
    }
    return kFound;
  });
}

int cmd_obstruct(const std::string& file, const std::string& f, const std::string& g,
                 const std::optional<std::string>& at, const Options& o, Streams io) {
  return guarded(io, [&] {
    Session ses = load_session(file);
    auto [fm, gm] = pair_of(ses, f, g);
    if (at) {
      ObstructionCheck r = check_obstruction_at(fm, gm, ses.number(*at), o.budget);
      if (auto* w = std::get_if<ObstructionWitness>(&r)) {
        if (o.json) {
          io.out << to_json(*w, o.budget).dump(2) << "\n";
        } else {
          print_witness(io.out, *w);
        }
        return kFound;
      }
      const NotAtS& miss = std::get<NotAtS>(r);
      if (o.json) {
        json j;
        j["found"] = false;
        j["reason"] = miss.reason;
        j["rotation"] = miss.rotation ? to_json(*miss.rotation) : json(nullptr);
        j["budgets"] = to_json(o.budget);
        io.out << j.dump(2) << "\n";
      } else {
        io.out << "not an obstruction at " << *at << ": " << miss.reason << "\n";
        if (miss.rotation) print_rotation(io.out, *miss.rotation);
      }
      return kNotFound;
    }
    ObstructionSearch r = search_obstruction(fm, gm, o.budget);
    if (o.json) {
      io.out << to_json(r, o.budget).dump(2) << "\n";
    } else if (r.found()) {
      print_witness(io.out, *r.witness);
      io.out << "candidates: " << r.candidates << "\n";
    } else {
      io.out << "not found: " << r.candidates << " candidates, " << r.outcomes.size()
             << " with a precondition (" << r.count_rational() << " rational, " << r.count_interval()
             << " undecided)\n";
    }
    return r.found() ? kFound : kNotFound;
  });
}

int cmd_catalog_list(const Options& o, Streams io) {
  auto list = catalog_list();
  if (o.json) {
    json j = json::array();
    for (const auto& c : list) j.push_back({{"name", c.name}, {"signature", c.signature}, {"summary", c.summary}});
    io.out << j.dump(2) << "\n";
  } else {
    for (const auto& c : list) io.out << c.signature << "\n    " << c.summary << "\n";
  }
  return kFound;
}

int cmd_catalog_emit(const std::string& name, const std::vector<std::string>& args, const Options& o, Streams io) {
  return guarded(io, [&] {
    FieldContext ctx;
    for (const auto& a : args) {
      FieldContext c = guess_field(a);
      if (!c.is_rational()) ctx = c;
    }
    CatalogEntry e = catalog_lookup(name, args, ctx);
    if (o.json) {
      io.out << to_json(e).dump(2) << "\n";
      return kFound;
    }
    io.out << "# " << e.display_name() << "\n";
    for (const auto& n : e.notes) io.out << "# " << n << "\n";
    io.out << "field " << field_decl(e.field) << ";\n";
    for (const auto& [gname, map] : e.generators.generators()) io.out << "map " << gname << " = " << format_map(map) << ";\n";
    if (e.expected) {
      io.out << "# expected obstruction: (" << e.expected->f << ", " << e.expected->g << ") at s = "
             << format_number(e.expected->s) << "\n";
    }
    return kFound;
  });
}

int cmd_verify_paper(const Options& o, Streams io) {
  std::vector<PaperRow> rows = run_paper_suite(o.budget);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (o.json) {
    json j;
    j["pass"] = all;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["budgets"] = to_json(o.budget);
    io.out << j.dump(2) << "\n";
  } else {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.name.size());
    for (const auto& r : rows) {
      io.out << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(w - r.name.size() + 2, ' ') << r.detail
             << "\n";
    }
    io.out << (all ? "all checks pass" : "some checks fail") << "\n";
  }
  return all ? kFound : kNotFound;
}

int cmd_search_bump(const std::string& file, const std::string& a, const std::string& b, const Options& o,
                    Streams io) {
  return guarded(io, [&] {
    Session s = load_session(file);
    return report_search(search_bump(s.maps, s.number(a), s.number(b), search_options(o)), s, o, io);
  });
}

int cmd_search_moveoff(const std::string& file, const std::string& lo, const std::string& hi, const Options& o,
                       Streams io) {
  return guarded(io, [&] {
    Session s = load_session(file);
    MoveOffResult r = search_move_off(s.maps, {s.number(lo), s.number(hi)}, search_options(o));
    json extra = json::object();
    if (r.search.found()) extra["verified_bound"] = r.verified_bound;
    if (!r.reason.empty()) extra["reason"] = r.reason;
    return report_search(r.search, s, o, io, extra);
  });
}

int cmd_search_avoid(const std::string& file, const std::vector<std::string>& intervals, const Options& o,
                     Streams io) {
  return guarded(io, [&] {
    if (intervals.size() < 2 || intervals.size() % 2 != 0) {
      throw ParseError("expected J as LO HI followed by zero or more K pairs");
    }
    Session s = load_session(file);
    std::vector<OpenInterval> ivs;
    for (std::size_t i = 0; i < intervals.size(); i += 2) {
      ivs.push_back({s.number(intervals[i]), s.number(intervals[i + 1])});
    }
    OpenInterval j = ivs.front();
    ivs.erase(ivs.begin());
    return report_search(search_support_avoider(s.maps, j, ivs, search_options(o)), s, o, io);
  });
}

}  // namespace plrot::cli
