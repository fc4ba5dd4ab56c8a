#pragma once

#include <string>
#include <vector>

#include "zetashuffle/lincomb.hpp"

namespace zetashuffle {

/// Older form of x^a y^r sh x^b y^s. All parameters >= 1, else
/// DomainError(kPositivityRequired).
LinComb expand_lgm_1_1(int a, int r, int b, int s);

/// Older form of x^a y^r sh x^{b1}y^{s1}x^{b2}y^{s2} as the sum of four sums.
LinComb expand_lgm_1_2(int a, int r, int b1, int s1, int b2, int s2);

/// One of the four sums, 1-based.
LinComb lgm_1_2_sum(int which, int a, int r, int b1, int s1, int b2, int s2);

enum class EquivalencePair { kA, kB };

const char* to_string(EquivalencePair pair) noexcept;

/// Every parameter ranges over [1, max_param]; points whose word length
/// exceeds max_length are skipped.
struct GridBounds {
  int max_param = 0;
  int max_length = 0;
};

struct GridPoint {
  std::vector<int> params;
  bool pass = false;
};

struct EquivalenceReport {
  EquivalencePair pair = EquivalencePair::kA;
  GridBounds grid;
  std::vector<GridPoint> points;
  double elapsed_ms = 0.0;

  std::vector<GridPoint> failures() const;
  bool all_pass() const { return failures().empty(); }
};

/// Compares the older appendix form against the restricted formula at every
/// grid point. Pair A is (a, r, b, s), pair B is (a, r, b1, s1, b2, s2).
EquivalenceReport check_equivalence(EquivalencePair pair, const GridBounds& grid);

/// {"pair","grid":{"max_param","max_length"},"checked","failures":[[...]],"elapsed_ms"}
/// elapsed_ms is left out when `timing` is false so output is byte-stable.
std::string to_json(const EquivalenceReport& report, bool timing = true);

}  // namespace zetashuffle
