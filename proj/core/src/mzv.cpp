#include "zetashuffle/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetashuffle/error.hpp"
#include "zetashuffle/shuffle.hpp"

namespace zetashuffle {

NumericResult mzv_eval(const MzvIndex& idx, long terms) {
  if (terms < kMinTerms) {
    throw DomainError(ErrorCode::kTermsTooSmall,
                      "need at least " + std::to_string(kMinTerms) + " terms, got " + std::to_string(terms));
  }
  const std::size_t size = static_cast<std::size_t>(terms) + 2;
  // acc[m] = A_j(m): nested sum over m > m_j > ... > m_n > 0.
  std::vector<long double> acc(size, 0.0L);
  std::vector<long double> next(size, 0.0L);
  const auto ks = idx.ks();
  for (std::size_t m = 2; m < size; ++m) {
    acc[m] = acc[m - 1] + std::pow(static_cast<long double>(m - 1), -static_cast<long double>(ks.back()));
  }
  // Inner sum at the cutoff; the outer tail term is scaled by it.
  long double inner = 1.0L;
  for (std::size_t j = ks.size() - 1; j-- > 0;) {
    if (j == 0) inner = std::max(1.0L, acc[size - 1]);
    next[1] = 0.0L;
    for (std::size_t m = 2; m < size; ++m) {
      next[m] = next[m - 1] +
                acc[m - 1] * std::pow(static_cast<long double>(m - 1), -static_cast<long double>(ks[j]));
    }
    std::swap(acc, next);
  }
  const long double full = acc[static_cast<std::size_t>(terms) + 1];
  const long double half = acc[static_cast<std::size_t>(terms / 2) + 1];
  const double k1 = ks.front();
  NumericResult out;
  out.value = static_cast<double>(full);
  out.err_est = static_cast<double>(std::fabs(full - half)) +
                static_cast<double>(inner) * std::pow(static_cast<double>(terms), 1.0 - k1) / (k1 - 1.0);
  out.terms_used = terms;
  return out;
}

NumericResult zeta_of_lincomb(const LinComb& p, long terms) {
  std::string bad;
  for (const auto& [w, c] : p.terms()) {
    if (!is_admissible(w)) bad += (bad.empty() ? "" : ", ") + print_word(w);
  }
  if (!bad.empty()) throw DomainError(ErrorCode::kNotAdmissible, "inadmissible words: " + bad);
  if (terms < kMinTerms) {
    throw DomainError(ErrorCode::kTermsTooSmall,
                      "need at least " + std::to_string(kMinTerms) + " terms, got " + std::to_string(terms));
  }
  NumericResult out;
  out.terms_used = terms;
  for (const auto& [w, c] : p.terms()) {
    const double coeff = c.convert_to<double>();
    if (w.empty()) {
      out.value += coeff;
      continue;
    }
    const NumericResult term = mzv_eval(word_to_mzv(w), terms);
    out.value += coeff * term.value;
    out.err_est += std::fabs(coeff) * term.err_est;
  }
  return out;
}

double IdentityCheck::bound() const { return std::max(1e-6, 3.0 * err_est); }

IdentityCheck identity_check(const Word& u, const Word& v, long terms) {
  const NumericResult zu = zeta_of_lincomb(LinComb(u), terms);
  const NumericResult zv = zeta_of_lincomb(LinComb(v), terms);
  const NumericResult zp = zeta_of_lincomb(shuffle_recursive(u, v), terms);
  IdentityCheck out;
  out.lhs = zu.value * zv.value;
  out.rhs = zp.value;
  out.residual = std::fabs(out.lhs - out.rhs);
  out.err_est = std::fabs(zu.value) * zv.err_est + std::fabs(zv.value) * zu.err_est +
                zu.err_est * zv.err_est + zp.err_est;
  return out;
}

double identity_residual(const Word& u, const Word& v, long terms) {
  return identity_check(u, v, terms).residual;
}

}  // namespace zetashuffle
