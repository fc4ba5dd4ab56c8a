#pragma once

#include <array>
#include <span>
#include <vector>

#include "zetashuffle/lincomb.hpp"

namespace zetashuffle {

/// x^{x_exp} y^{y_len}
struct Run {
  int x_exp;
  int y_len;
};

/// Concatenation of the runs.
Word run_word(std::span<const Run> runs);

/// x^a y^r sh x^b y^s; a, b >= 0 and r, s >= 1.
LinComb expand_res_1_1(int a, int r, int b, int s);

/// x^a y^r sh x^{b1} y^{s1} x^{b2} y^{s2}.
LinComb expand_res_1_2(int a, int r, int b1, int s1, int b2, int s2);

/// Per-case coefficients (i)..(iv) at one alpha tuple.
std::array<Integer, 4> res_1_2_cases(std::span<const int> alphas, int a, int r, int b1, int s1,
                                     int b2, int s2);

/// Contribution of a single case, 0-based.
LinComb expand_res_1_2_case(int which, int a, int r, int b1, int s1, int b2, int s2);

struct Res22Params {
  int a1, r1, a2, r2;
  int b1, s1, b2, s2;

  Res22Params swapped() const { return {b1, s1, b2, s2, a1, r1, a2, r2}; }
};

/// x^{a1}y^{r1}x^{a2}y^{r2} sh x^{b1}y^{s1}x^{b2}y^{s2}.
LinComb expand_res_2_2(const Res22Params& p);

/// One-sided coefficient c(a1,a2,r1,r2; b1,b2,s1,s2) split by case (i)..(x).
/// Counts the interleavings whose first y comes from the left word.
std::array<Integer, 10> res_2_2_cases(std::span<const int> alphas, const Res22Params& p);

/// One-sided contribution of a single case, 0-based.
LinComb expand_res_2_2_case(int which, const Res22Params& p);

inline constexpr int kMaxFactors = 8;

/// x^{a_1}y^{r_1} sh ... sh x^{a_n}y^{r_n}. Throws
/// DomainError(kTooManyFactors) for n > kMaxFactors.
LinComb expand_nfold(std::span<const Run> runs);

/// x^{a_1}y sh ... sh x^{a_n}y.
LinComb expand_nfold_depth1(std::span<const int> as);

}  // namespace zetashuffle
