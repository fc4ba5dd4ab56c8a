#pragma once

#include "zetashuffle/lincomb.hpp"
#include "zetashuffle/words.hpp"

namespace zetashuffle {

inline constexpr long kDefaultTerms = 20'000;
inline constexpr long kMinTerms = 16;

struct NumericResult {
  double value = 0.0;
  double err_est = 0.0;
  long terms_used = 0;
};

/// Truncated nested sum over M >= m_1 > ... > m_n > 0 computed as a running
/// prefix-sum recursion in O(n M). The error estimate is the M vs M/2
/// difference plus the outer tail bound M^{1-k_1}/(k_1-1) scaled by the inner
/// nested sum at M (1 at depth one). Heuristic, not a rigorous bound. Throws DomainError(kTermsTooSmall) if M < kMinTerms.
NumericResult mzv_eval(const MzvIndex& idx, long terms = kDefaultTerms);

/// Linear extension; the empty word maps to 1. Throws
/// DomainError(kNotAdmissible) naming every inadmissible word.
NumericResult zeta_of_lincomb(const LinComb& p, long terms = kDefaultTerms);

struct IdentityCheck {
  double lhs = 0.0;       // zeta(u) zeta(v)
  double rhs = 0.0;       // zeta(u sh v)
  double residual = 0.0;  // |lhs - rhs|
  double err_est = 0.0;   // combined estimate for both sides
  /// max(1e-6, 3 err_est)
  double bound() const;
};

IdentityCheck identity_check(const Word& u, const Word& v, long terms = kDefaultTerms);

/// |zeta(u) zeta(v) - zeta(u sh v)|.
double identity_residual(const Word& u, const Word& v, long terms = kDefaultTerms);

}  // namespace zetashuffle
