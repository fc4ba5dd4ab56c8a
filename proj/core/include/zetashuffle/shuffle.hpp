#pragma once

#include <span>

#include "zetashuffle/lincomb.hpp"

namespace zetashuffle {

/// Shuffle product from the recursive rules
///   1 sh w = w sh 1 = w,  au sh bv = a(u sh bv) + b(au sh v),
/// memoized over suffix pairs for the duration of one call.
LinComb shuffle_recursive(const Word& u, const Word& v);

/// Shuffle product by listing all binom(|u|+|v|, |u|) interleavings.
/// Shares no code with shuffle_recursive.
LinComb shuffle_permutation(const Word& u, const Word& v);

/// u sh p, extended linearly in p.
LinComb shuffle_recursive(const LinComb& p, const Word& v);

/// Left fold of shuffle_recursive. Throws DomainError(kInvalidArgument) on an
/// empty list.
LinComb shuffle_nfold(std::span<const Word> ws);

}  // namespace zetashuffle
