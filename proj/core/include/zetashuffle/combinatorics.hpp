#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zetashuffle/lincomb.hpp"

namespace zetashuffle {

/// binom(n, k), zero when k < 0 or k > n. Throws
/// DomainError(kNegativeUpperIndex) when n < 0.
Integer binom(long n, long k);

/// As binom, but binom(-1, 0) = 1: an empty run of a run-count formula has
/// exactly one placement. n < -1 still throws.
Integer run_binom(long n, long k);

/// Sum_i binom(k,i) binom(l,n-i) == binom(k+l,n).
bool vandermonde_check(int k, int l, int n);

/// Ordered tuple of positive integers.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int sum() const noexcept { return prefix_.back(); }
  /// Sum of the first j parts, 0 <= j <= size().
  int prefix(int j) const { return prefix_[static_cast<std::size_t>(j)]; }

 private:
  std::vector<int> parts_;
  std::vector<int> prefix_;
};

/// All compositions of `total` into `parts` positive parts, lexicographic.
std::vector<Composition> compositions(int total, int parts);

/// Visits every weak composition of `total` into `parts` nonnegative parts
/// in lexicographic order. The span is only valid during the call.
void for_each_weak_composition(int total, int parts,
                               const std::function<void(std::span<const int>)>& visit);

/// Weak compositions with a lower bound per part.
void for_each_bounded_composition(int total, std::span<const int> minimums,
                                  const std::function<void(std::span<const int>)>& visit);

/// Sum over all alpha-tuples of `total` into `parts` of coeff(alpha) times the
/// word x^{alpha_1}y...x^{alpha_parts}y.
LinComb expand_over_alphas(int total, int parts,
                           const std::function<Integer(std::span<const int>)>& coeff);

}  // namespace zetashuffle
