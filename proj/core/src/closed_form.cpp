#include "zetashuffle/closed_form.hpp"

#include <algorithm>
#include <numeric>

#include "zetashuffle/error.hpp"

namespace zetashuffle {

namespace {

long prefix_sum(std::span<const int> xs, int k) {
  return std::accumulate(xs.begin(), xs.begin() + k, 0L);
}

void check_shape(const Composition& l, const Composition& n, std::span<const int> alphas,
                 const ExponentForm& a, const ExponentForm& b) {
  if (l.sum() != a.depth() || n.sum() != b.depth() ||
      static_cast<int>(alphas.size()) != a.depth() + b.depth()) {
    throw DomainError(ErrorCode::kDimensionMismatch,
                      "compositions must split r and s, and alphas must have r+s entries");
  }
}

// Both sequences share one recursion: `first` is the word whose block opens
// each round, `second` the word that answers it.
std::vector<long> interleave_sequence(const Composition& first, const Composition& second,
                                      std::span<const int> alphas, std::span<const int> fa,
                                      std::span<const int> fb) {
  const int total = first.sum() + second.sum();
  std::vector<long> out(static_cast<std::size_t>(total));
  auto at = [&](int pos) -> long& { return out[static_cast<std::size_t>(pos - 1)]; };
  for (int j = 0; j < first.size(); ++j) {
    const int F = first.prefix(j);
    const int S = second.prefix(j);
    at(F + S + 1) = prefix_sum(fa, F + 1) + prefix_sum(fb, S) - prefix_sum(alphas, F + S);
    for (int t = 2; t <= first[j]; ++t) at(F + S + t) = fa[F + t - 1];
  }
  for (int j = 0; j < second.size(); ++j) {
    const int F = first.prefix(j + 1);
    const int S = second.prefix(j);
    at(F + S + 1) = prefix_sum(fa, F) + prefix_sum(fb, S + 1) - prefix_sum(alphas, F + S);
    for (int t = 2; t <= second[j]; ++t) at(F + S + t) = fb[S + t - 1];
  }
  return out;
}

// prod_{i <= upto} binom(alpha_i, seq_i)
Integer binom_product(std::span<const int> alphas, const std::vector<long>& seq, int upto) {
  Integer out = 1;
  for (int i = 0; i < upto; ++i) {
    out *= binom(alphas[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(i)]);
    if (out == 0) return out;
  }
  return out;
}

// alpha_j == src_{j - offset} for every j in [from, r+s] (1-based).
bool trailing_match(std::span<const int> alphas, std::span<const int> src, int offset, int from) {
  for (int j = from; j <= static_cast<int>(alphas.size()); ++j) {
    if (alphas[static_cast<std::size_t>(j - 1)] != src[static_cast<std::size_t>(j - offset - 1)]) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<long> beta_sequence(const Composition& l, const Composition& n,
                                std::span<const int> alphas, const ExponentForm& a,
                                const ExponentForm& b) {
  check_shape(l, n, alphas, a, b);
  if (l.size() != n.size() && l.size() != n.size() + 1) {
    throw DomainError(ErrorCode::kDimensionMismatch, "beta needs len(l) = len(n) or len(n) + 1");
  }
  return interleave_sequence(l, n, alphas, a.exps(), b.exps());
}

std::vector<long> gamma_sequence(const Composition& l, const Composition& n,
                                 std::span<const int> alphas, const ExponentForm& a,
                                 const ExponentForm& b) {
  check_shape(l, n, alphas, a, b);
  if (n.size() != l.size() && n.size() != l.size() + 1) {
    throw DomainError(ErrorCode::kDimensionMismatch, "gamma needs len(n) = len(l) or len(l) + 1");
  }
  return interleave_sequence(n, l, alphas, b.exps(), a.exps());
}

Integer coeff_general(std::span<const int> alphas, const ExponentForm& a, const ExponentForm& b) {
  const int r = a.depth();
  const int s = b.depth();
  if (static_cast<int>(alphas.size()) != r + s) {
    throw DomainError(ErrorCode::kDimensionMismatch, "alpha tuple must have r+s entries");
  }
  if (std::accumulate(alphas.begin(), alphas.end(), 0L) != a.x_count() + b.x_count()) {
    throw DomainError(ErrorCode::kDimensionMismatch, "alpha tuple must sum to the number of x's");
  }
  const auto as = a.exps();
  const auto bs = b.exps();
  Integer total = 0;
  for (int p = 1; p <= std::min(r, s); ++p) {
    const auto ls_p = compositions(r, p);
    const auto ns_p = compositions(s, p);
    // (i) l has p+1 parts, n has p parts; a closes the word.
    if (r >= p + 1) {
      for (const auto& l : compositions(r, p + 1)) {
        if (!trailing_match(alphas, as, s, l.prefix(p) + s + 2)) continue;
        for (const auto& n : ns_p) {
          total += binom_product(alphas, beta_sequence(l, n, alphas, a, b), l.prefix(p) + s);
        }
      }
    }
    // (ii) p parts each; b closes the word.
    for (const auto& n : ns_p) {
      if (!trailing_match(alphas, bs, r, r + n.prefix(p - 1) + 2)) continue;
      for (const auto& l : ls_p) {
        total += binom_product(alphas, beta_sequence(l, n, alphas, a, b), r + n.prefix(p - 1));
      }
    }
    // (iii) mirror of (i).
    if (s >= p + 1) {
      for (const auto& n : compositions(s, p + 1)) {
        if (!trailing_match(alphas, bs, r, r + n.prefix(p) + 2)) continue;
        for (const auto& l : ls_p) {
          total += binom_product(alphas, gamma_sequence(l, n, alphas, a, b), r + n.prefix(p));
        }
      }
    }
    // (iv) mirror of (ii).
    for (const auto& l : ls_p) {
      if (!trailing_match(alphas, as, s, l.prefix(p - 1) + s + 2)) continue;
      for (const auto& n : ns_p) {
        total += binom_product(alphas, gamma_sequence(l, n, alphas, a, b), l.prefix(p - 1) + s);
      }
    }
  }
  return total;
}

LinComb expand_general(const ExponentForm& a, const ExponentForm& b) {
  return expand_over_alphas(a.x_count() + b.x_count(), a.depth() + b.depth(),
                            [&](std::span<const int> alphas) { return coeff_general(alphas, a, b); });
}

namespace {

void require_nonnegative(std::span<const int> xs, const char* what) {
  if (std::any_of(xs.begin(), xs.end(), [](int x) { return x < 0; })) {
    throw DomainError(ErrorCode::kInvalidArgument, std::string(what) + " must be nonnegative");
  }
}

Integer kd(long x, long y) { return x == y ? 1 : 0; }

}  // namespace

LinComb expand_euler(int a, int b) {
  const int ab[] = {a, b};
  require_nonnegative(ab, "exponents");
  return expand_over_alphas(a + b, 2, [&](std::span<const int> al) {
    return binom(al[0], a) + binom(al[0], b);
  });
}

LinComb expand_1_s(int a, const ExponentForm& b) {
  const int one[] = {a};
  require_nonnegative(one, "a");
  const int s = b.depth();
  // alpha and b are 1-based in the body below.
  auto coeff = [&](std::span<const int> alv) {
    auto al = [&](int i) -> long { return alv[static_cast<std::size_t>(i - 1)]; };
    auto bb = [&](int i) -> long { return b[static_cast<std::size_t>(i - 1)]; };
    Integer head = binom(al(1), a);
    for (int j = 3; j <= s + 1 && head != 0; ++j) head *= kd(al(j), bb(j - 1));
    Integer all = 1;
    for (int i = 1; i <= s && all != 0; ++i) all *= binom(al(i), bb(i));
    Integer mid = 0;
    for (int k = 1; k <= s - 1; ++k) {
      Integer term = 1;
      for (int i = 1; i <= k && term != 0; ++i) term *= binom(al(i), bb(i));
      if (term == 0) continue;
      term *= binom(al(k + 1), bb(k + 1) - al(k + 2));
      for (int j = k + 3; j <= s + 1 && term != 0; ++j) term *= kd(al(j), bb(j - 1));
      mid += term;
    }
    return head + all + mid;
  };
  return expand_over_alphas(a + b.x_count(), s + 1, coeff);
}

int small_case_arity(SmallCase c) {
  const auto [r, s] = small_case_shape(c);
  return r + s;
}

std::pair<int, int> small_case_shape(SmallCase c) {
  switch (c) {
    case SmallCase::kC12: return {1, 2};
    case SmallCase::kC13: return {1, 3};
    case SmallCase::kC22: return {2, 2};
    case SmallCase::kC23: return {2, 3};
    case SmallCase::kC33: return {3, 3};
  }
  return {0, 0};
}

namespace {

Integer c12(std::span<const int> al, std::span<const int> p) {
  const long a1 = al[0], a2 = al[1], a3 = al[2];
  const long a = p[0], b1 = p[1], b2 = p[2];
  return binom(a1, a) * kd(a3, b2) + binom(a1, b1) * binom(a2, b2) +
         binom(a1, b1) * binom(a2, b2 - a3);
}

Integer c13(std::span<const int> al, std::span<const int> p) {
  const long a1 = al[0], a2 = al[1], a3 = al[2], a4 = al[3];
  const long a = p[0], b1 = p[1], b2 = p[2], b3 = p[3];
  return binom(a1, a) * kd(a3, b2) * kd(a4, b3) +
         binom(a1, b1) * binom(a2, b2 - a3) * kd(a4, b3) +
         binom(a1, b1) * binom(a2, b2) * (binom(a3, b3) + binom(a3, b3 - a4));
}

Integer c22(std::span<const int> al, std::span<const int> p) {
  const long a1 = al[0], a2 = al[1], a3 = al[2], a4 = al[3];
  const long A1 = p[0], A2 = p[1], B1 = p[2], B2 = p[3];
  return binom(a1, A1) * binom(a2, A2) * kd(a4, B2) + binom(a1, B1) * binom(a2, B2) * kd(a4, A2) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * (binom(a3, B2) + binom(a3, B2 - a4)) +
         binom(a1, B1) * binom(a2, A1 + B1 - a1) * (binom(a3, A2) + binom(a3, A2 - a4));
}

// The second term reads binom(alpha_3, b_2 - alpha_4); see FORMULA_NOTES.
Integer c23(std::span<const int> al, std::span<const int> p) {
  const long a1 = al[0], a2 = al[1], a3 = al[2], a4 = al[3], a5 = al[4];
  const long A1 = p[0], A2 = p[1], B1 = p[2], B2 = p[3], B3 = p[4];
  return binom(a1, A1) * binom(a2, A2) * kd(a4, B2) * kd(a5, B3) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * binom(a3, B2 - a4) * kd(a5, B3) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * binom(a3, B2) * (binom(a4, B3) + binom(a4, B3 - a5)) +
         binom(a1, B1) * binom(a2, B2) * binom(a3, B3) * kd(a5, A2) +
         binom(a1, B1) * binom(a2, A1 + B1 - a1) * binom(a3, A2) * kd(a5, B3) +
         binom(a1, B1) * binom(a2, B2) * binom(a3, A2 + B3 - a4 - a5) * (binom(a4, A2) + binom(a4, A2 - a5)) +
         binom(a1, B1) * binom(a2, A1 + B1 - a1) * binom(a3, A2 + B3 - a4 - a5) *
             (binom(a4, B3) + binom(a4, B3 - a5));
}

// One half of the symmetrized 3x3 coefficient.
Integer c33_half(std::span<const int> al, long A1, long A2, long A3, long B1, long B2, long B3) {
  const long a1 = al[0], a2 = al[1], a3 = al[2], a4 = al[3], a5 = al[4], a6 = al[5];
  return binom(a1, A1) * binom(a2, A2) * binom(a3, A3) * kd(a5, B2) * kd(a6, B3) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * binom(a3, B2) * binom(a4, B3) * kd(a6, A3) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * binom(a3, A1 + A2 + B1 - a1 - a2) * binom(a4, A3) *
             kd(a6, B3) +
         binom(a1, A1) * binom(a2, A2) * binom(a3, A1 + A2 + B1 - a1 - a2) * binom(a4, B2 - a5) *
             kd(a6, B3) +
         binom(a1, A1) * binom(a2, A2) * binom(a3, A1 + A2 + B1 - a1 - a2) * binom(a4, B2) *
             (binom(a5, B3) + binom(a5, B3 - a6)) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * binom(a3, B2) * binom(a4, A3 + B3 - a5 - a6) *
             (binom(a5, A3) + binom(a5, A3 - a6)) +
         binom(a1, A1) * binom(a2, A1 + B1 - a1) * binom(a3, A1 + A2 + B1 - a1 - a2) *
             binom(a4, A3 + B3 - a5 - a6) * (binom(a5, B3) + binom(a5, B3 - a6));
}

Integer c33(std::span<const int> al, std::span<const int> p) {
  return c33_half(al, p[0], p[1], p[2], p[3], p[4], p[5]) +
         c33_half(al, p[3], p[4], p[5], p[0], p[1], p[2]);
}

}  // namespace

Integer coeff_small(SmallCase c, std::span<const int> alphas, std::span<const int> params) {
  if (static_cast<int>(params.size()) != small_case_arity(c) ||
      static_cast<int>(alphas.size()) != small_case_arity(c)) {
    throw DomainError(ErrorCode::kDimensionMismatch, "wrong number of parameters for this case");
  }
  switch (c) {
    case SmallCase::kC12: return c12(alphas, params);
    case SmallCase::kC13: return c13(alphas, params);
    case SmallCase::kC22: return c22(alphas, params);
    case SmallCase::kC23: return c23(alphas, params);
    case SmallCase::kC33: return c33(alphas, params);
  }
  return 0;
}

LinComb expand_small(SmallCase c, std::span<const int> params) {
  if (static_cast<int>(params.size()) != small_case_arity(c)) {
    throw DomainError(ErrorCode::kDimensionMismatch, "wrong number of parameters for this case");
  }
  require_nonnegative(params, "exponents");
  const int total = std::accumulate(params.begin(), params.end(), 0);
  return expand_over_alphas(total, small_case_arity(c), [&](std::span<const int> al) {
    return coeff_small(c, al, params);
  });
}

}  // namespace zetashuffle
