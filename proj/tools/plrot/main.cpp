#include <cmath>
#include <cstdint>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

/// Positive integer written as `N`, `NeK` or `B^K`.
std::int64_t parse_count(const std::string& text, const char* flag) {
  static const std::regex re(R"(^\s*([0-9]+)(?:([e^])([0-9]+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, re) && m[1].length() <= 18 && (!m[3].matched || m[3].length() <= 2)) {
    long double v = std::stold(m[1].str());
    if (m[2].matched) {
      long double k = std::stold(m[3].str());
      v = m[2] == "e" ? v * std::pow(10.0L, k) : std::pow(v, k);
    }
    if (v >= 1 && v <= 9.0e15L) return static_cast<std::int64_t>(v);
  }
  throw CLI::ValidationError(flag, "expected a positive integer such as 1000000, 1e6 or 10^6, got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace plrot::cli;
  CLI::App app{"plrot: exact computations in groups of PL homeomorphisms of an interval"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::string nmax = "1000000", node_budget = "10000";
  app.add_option("--qmax", opts.budget.q_max, "largest period tried by the periodic-orbit search")
      ->default_val(64)
      ->check(CLI::PositiveNumber);
  app.add_option("--nmax", nmax, "iterations for the rotation interval (N, 1e6 or 10^6)")->capture_default_str();
  app.add_option("--maxlen", opts.maxlen, "longest word in bounded searches")
      ->default_val(8)
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", node_budget, "largest node count of intermediate maps")->capture_default_str();
  app.add_flag("--json", opts.json, "machine-readable output");

  std::string file, word, x, f, g, s, a, b, name;
  std::optional<std::string> at;
  std::vector<std::string> args;
  bool search = false;
  Streams io{std::cout, std::cerr};
  int code = kError;

  // Subcommand callbacks run after the global options are parsed.
  auto budgets = [&] {
    opts.budget.n_max = parse_count(nmax, "--nmax");
    opts.budget.node_budget = static_cast<std::size_t>(parse_count(node_budget, "--node-budget"));
  };

  auto* eval = app.add_subcommand("eval", "evaluate a word at a point");
  eval->add_option("file", file, "session file")->required();
  eval->add_option("word", word)->required();
  eval->add_option("x", x)->required();
  eval->callback([&] {
    budgets();
    code = cmd_eval(file, word, x, opts, io);
  });

  auto* rotnum = app.add_subcommand("rotnum", "rotation number of f modulo g at s");
  rotnum->add_option("file", file, "session file")->required();
  rotnum->add_option("f", f)->required();
  rotnum->add_option("g", g)->required();
  rotnum->add_option("s", s)->required();
  rotnum->callback([&] {
    budgets();
    code = cmd_rotnum(file, f, g, s, opts, io);
  });

  auto* obstruct = app.add_subcommand("obstruct", "check or search for an obstruction witness");
  obstruct->add_option("file", file, "session file")->required();
  obstruct->add_option("f", f)->required();
  obstruct->add_option("g", g)->required();
  auto* at_opt = obstruct->add_option("--at", at, "check a single point");
  auto* search_opt = obstruct->add_flag("--search", search, "search the candidate grid");
  at_opt->excludes(search_opt);
  obstruct->callback([&] {
    budgets();
    if (!at && !search) throw CLI::ValidationError("obstruct", "one of --at S or --search is required");
    code = cmd_obstruct(file, f, g, at, opts, io);
  });

  auto* catalog = app.add_subcommand("catalog", "built-in groups");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list entries")->callback([&] {
    budgets();
    code = cmd_catalog_list(opts, io);
  });
  auto* emit = catalog->add_subcommand("emit", "print an entry as a session file");
  emit->add_option("name", name)->required();
  emit->add_option("args", args, "entry parameters");
  emit->callback([&] {
    budgets();
    code = cmd_catalog_emit(name, args, opts, io);
  });

  app.add_subcommand("verify-paper", "run the reproduction checks")->callback([&] {
    budgets();
    code = cmd_verify_paper(opts, io);
  });

  auto* search_cmd = app.add_subcommand("search", "bounded word searches");
  search_cmd->require_subcommand(1);
  auto* bump = search_cmd->add_subcommand("bump", "element whose support is exactly (a, b)");
  bump->add_option("file", file)->required();
  bump->add_option("a", a)->required();
  bump->add_option("b", b)->required();
  bump->callback([&] {
    budgets();
    code = cmd_search_bump(file, a, b, opts, io);
  });
  auto* moveoff = search_cmd->add_subcommand("moveoff", "element moving [lo, hi] off itself");
  moveoff->add_option("file", file)->required();
  moveoff->add_option("lo", a)->required();
  moveoff->add_option("hi", b)->required();
  moveoff->callback([&] {
    budgets();
    code = cmd_search_moveoff(file, a, b, opts, io);
  });
  auto* avoid = search_cmd->add_subcommand("avoid", "element supported in J, missing each K");
  avoid->add_option("file", file)->required();
  avoid->add_option("bounds", args, "J_LO J_HI [K_LO K_HI ...]")->required();
  avoid->callback([&] {
    budgets();
    code = cmd_search_avoid(file, args, opts, io);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }
  return code;
}
