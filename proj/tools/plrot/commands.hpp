#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plrot/circlemap.hpp"

namespace plrot::cli {

/// Exit codes.
inline constexpr int kFound = 0;
inline constexpr int kNotFound = 1;
inline constexpr int kError = 2;

struct Options {
  RotationBudget budget;
  int maxlen = 8;
  bool json = false;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_eval(const std::string& file, const std::string& word, const std::string& x, const Options& o, Streams io);
int cmd_rotnum(const std::string& file, const std::string& f, const std::string& g, const std::string& s,
               const Options& o, Streams io);
/// With `at` set, checks that point; otherwise searches the candidate grid.
int cmd_obstruct(const std::string& file, const std::string& f, const std::string& g,
                 const std::optional<std::string>& at, const Options& o, Streams io);
int cmd_catalog_list(const Options& o, Streams io);
int cmd_catalog_emit(const std::string& name, const std::vector<std::string>& args, const Options& o, Streams io);
int cmd_verify_paper(const Options& o, Streams io);

int cmd_search_bump(const std::string& file, const std::string& a, const std::string& b, const Options& o,
                    Streams io);
int cmd_search_moveoff(const std::string& file, const std::string& lo, const std::string& hi, const Options& o,
                       Streams io);
/// `intervals` holds J first, then any number of K, each as a (lo, hi) pair.
int cmd_search_avoid(const std::string& file, const std::vector<std::string>& intervals, const Options& o,
                     Streams io);

}  // namespace plrot::cli
