#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plrot/circlemap.hpp"

namespace plrot::cli {

/// Tally of a sweep over standard-F pairs built from short words.
struct ConformanceStats {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::size_t points = 0;  ///< (pair, s) with a precondition holding
  std::size_t rational = 0;
  std::size_t irrational = 0;
  std::size_t undecided = 0;
  std::size_t bad_certificates = 0;
  std::int64_t max_q = 0;
};

/// Every ordered pair of non-trivial elements given by words of length
/// <= maxlen in x0, x1; every candidate point where a precondition holds.
ConformanceStats standard_f_conformance(int maxlen, const RotationBudget& budget);

struct PaperRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The six groups of reproduction checks, in a fixed order.
std::vector<PaperRow> run_paper_suite(const RotationBudget& budget, int conformance_maxlen = 3);

}  // namespace plrot::cli
