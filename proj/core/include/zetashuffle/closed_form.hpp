#pragma once

#include <span>
#include <vector>

#include "zetashuffle/combinatorics.hpp"
#include "zetashuffle/lincomb.hpp"
#include "zetashuffle/words.hpp"

namespace zetashuffle {

/// (alpha_1, ..., alpha_{r+s}); nonnegative with a fixed sum.
using AlphaTuple = std::vector<int>;

/// beta_1..beta_{r+s} for a split l of r and n of s with len(l) == len(n) + 1
/// or len(l) == len(n). Entries may be negative.
std::vector<long> beta_sequence(const Composition& l, const Composition& n,
                                std::span<const int> alphas, const ExponentForm& a,
                                const ExponentForm& b);

/// Mirror of beta_sequence: len(n) == len(l) + 1 or len(n) == len(l).
std::vector<long> gamma_sequence(const Composition& l, const Composition& n,
                                 std::span<const int> alphas, const ExponentForm& a,
                                 const ExponentForm& b);

/// Coefficient of x^{alpha_1}y...x^{alpha_{r+s}}y in a sh b.
Integer coeff_general(std::span<const int> alphas, const ExponentForm& a,
                      const ExponentForm& b);

LinComb expand_general(const ExponentForm& a, const ExponentForm& b);

/// x^a y sh x^b y.
LinComb expand_euler(int a, int b);

/// x^a y sh x^{b_1}y...x^{b_s}y.
LinComb expand_1_s(int a, const ExponentForm& b);

enum class SmallCase { kC12, kC13, kC22, kC23, kC33 };

/// Number of exponent parameters: 3, 4, 4, 5, 6.
int small_case_arity(SmallCase c);
/// (depth of left word, depth of right word).
std::pair<int, int> small_case_shape(SmallCase c);

/// Parameters are (a_1..a_r, b_1..b_s) for the shape of the case.
Integer coeff_small(SmallCase c, std::span<const int> alphas, std::span<const int> params);
LinComb expand_small(SmallCase c, std::span<const int> params);

}  // namespace zetashuffle
