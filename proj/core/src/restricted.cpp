#include "zetashuffle/restricted.hpp"

#include <algorithm>
#include <numeric>

#include "zetashuffle/combinatorics.hpp"
#include "zetashuffle/error.hpp"

namespace zetashuffle {

namespace {

// 1-based accessors over an alpha tuple.
class Alphas {
 public:
  explicit Alphas(std::span<const int> al) : al_(al), prefix_(al.size() + 1, 0) {
    for (std::size_t i = 0; i < al.size(); ++i) prefix_[i + 1] = prefix_[i] + al[i];
  }

  long at(int i) const { return al_[static_cast<std::size_t>(i - 1)]; }
  /// alpha_1 + ... + alpha_k
  long sum(int k) const { return prefix_[static_cast<std::size_t>(k)]; }
  /// alpha_lo + ... + alpha_hi, zero for an empty range.
  long sum(int lo, int hi) const { return lo > hi ? 0 : sum(hi) - sum(lo - 1); }
  /// alpha_i == 0 for lo <= i <= hi.
  bool zeros(int lo, int hi) const {
    lo = std::max(lo, 1);
    hi = std::min(hi, size());
    return sum(lo, hi) == 0;
  }
  int size() const { return static_cast<int>(al_.size()); }

 private:
  std::span<const int> al_;
  std::vector<long> prefix_;
};

Integer B(long n, long k) { return run_binom(n, k); }

// n-fold placements: a negative upper index means too few later slots, so
// the placement count is 0.
Integer P(long n, long k) { return n < 0 ? Integer(0) : binom(n, k); }
Integer kd(long x, long y) { return x == y ? 1 : 0; }

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(ErrorCode::kInvalidArgument, what);
}

// Visits (x_1..x_k) >= mins summing to total.
template <typename F>
void splits(int total, std::initializer_list<int> mins, F&& visit) {
  const std::vector<int> m(mins);
  for_each_bounded_composition(total, m, [&](std::span<const int> parts) { visit(parts); });
}

}  // namespace

Word run_word(std::span<const Run> runs) {
  std::vector<Letter> letters;
  for (const Run& run : runs) {
    letters.insert(letters.end(), static_cast<std::size_t>(run.x_exp), Letter::X);
    letters.insert(letters.end(), static_cast<std::size_t>(run.y_len), Letter::Y);
  }
  return Word(std::move(letters));
}

LinComb expand_res_1_1(int a, int r, int b, int s) {
  require(a >= 0 && b >= 0 && r >= 1 && s >= 1, "need a, b >= 0 and r, s >= 1");
  const int R = r + s;
  return expand_over_alphas(a + b, R, [&](std::span<const int> span) {
    const Alphas al(span);
    Integer t = 0;
    for (int l = 1; l <= r; ++l) {
      if (al.zeros(l + 2, R)) t += B(al.at(1), a) * B(R - l - 1, r - l);
    }
    for (int l = 1; l <= s; ++l) {
      if (al.zeros(l + 2, R)) t += B(al.at(1), b) * B(R - l - 1, s - l);
    }
    return t;
  });
}

std::array<Integer, 4> res_1_2_cases(std::span<const int> span, int a, int r, int b1, int s1, int b2,
                                     int s2) {
  const Alphas al(span);
  const int R = r + s1 + s2;
  std::array<Integer, 4> c{};
  // (i) the y-run of the left word splits as r1 r2 r3 r4 around both right blocks.
  splits(r, {1, 0, 0, 0}, [&](std::span<const int> q) {
    const int r1 = q[0], r2 = q[1], r3 = q[2], r4 = q[3];
    if (al.sum(r1 + 1) == a + b1 && al.zeros(r1 + 2, r1 + r2 + s1) &&
        al.zeros(r1 + r2 + r3 + s1 + 2, R)) {
      c[0] += B(al.at(1), a) * B(r2 + s1 - 2, r2) * B(r4 + s2 - 1, r4);
    }
  });
  // (ii)
  splits(r, {1, 0, 0}, [&](std::span<const int> q) {
    const int r1 = q[0], r2 = q[1], r3 = q[2];
    for (int l = 1; l <= s1 - 1; ++l) {
      if (al.sum(l + 1) == a + b1 && al.zeros(l + 2, r1 + s1) && al.zeros(r1 + r2 + s1 + 2, R)) {
        c[1] += B(al.at(1), b1) * B(r1 + s1 - l - 2, r1 - 1) * B(r3 + s2 - 1, r3);
      }
    }
  });
  // (iii)
  for (int r1 = 1; r1 <= r; ++r1) {
    const int r2 = r - r1;
    if (al.zeros(r1 + s1 + 2, R)) {
      c[2] += B(al.at(1), b1) * B(al.at(s1 + 1), a + b1 - al.sum(s1)) * B(r2 + s2 - 1, r2);
    }
  }
  // (iv)
  for (int l = 1; l <= s2; ++l) {
    if (al.zeros(s1 + l + 2, R)) {
      c[3] += B(al.at(1), b1) * B(al.at(s1 + 1), b2) * B(r + s2 - l - 1, r - 1);
    }
  }
  return c;
}

namespace {

void require_res_1_2(int a, int r, int b1, int s1, int b2, int s2) {
  require(a >= 0 && b1 >= 0 && b2 >= 0 && r >= 1 && s1 >= 1 && s2 >= 1,
          "need a, b1, b2 >= 0 and r, s1, s2 >= 1");
}

}  // namespace

LinComb expand_res_1_2(int a, int r, int b1, int s1, int b2, int s2) {
  require_res_1_2(a, r, b1, s1, b2, s2);
  return expand_over_alphas(a + b1 + b2, r + s1 + s2, [&](std::span<const int> al) {
    const auto c = res_1_2_cases(al, a, r, b1, s1, b2, s2);
    return c[0] + c[1] + c[2] + c[3];
  });
}

LinComb expand_res_1_2_case(int which, int a, int r, int b1, int s1, int b2, int s2) {
  require(which >= 0 && which < 4, "case index out of range");
  require_res_1_2(a, r, b1, s1, b2, s2);
  return expand_over_alphas(a + b1 + b2, r + s1 + s2, [&](std::span<const int> al) {
    return res_1_2_cases(al, a, r, b1, s1, b2, s2)[static_cast<std::size_t>(which)];
  });
}

std::array<Integer, 10> res_2_2_cases(std::span<const int> span, const Res22Params& p) {
  const Alphas al(span);
  const int a1 = p.a1, a2 = p.a2, r1 = p.r1, r2 = p.r2;
  const int b1 = p.b1, b2 = p.b2, s1 = p.s1, s2 = p.s2;
  const int R = r1 + r2 + s1 + s2;
  std::array<Integer, 10> c{};
  const long A1 = al.at(1);

  // (i)-(iv): the first left block ends before the right word starts.
  splits(r2, {1, 0, 0, 0}, [&](std::span<const int> q) {
    const int l1 = q[0], l2 = q[1], l3 = q[2], l4 = q[3];
    if (al.sum(r1 + l1 + 1) == a1 + a2 + b1 && al.zeros(r1 + l1 + 2, r1 + l1 + l2 + s1) &&
        al.zeros(r1 + l1 + l2 + l3 + s1 + 2, R)) {
      c[0] += B(A1, a1) * B(al.at(r1 + 1), a2) * B(l2 + s1 - 2, l2) * B(l4 + s2 - 1, l4);
    }
  });
  splits(r2, {1, 0, 0}, [&](std::span<const int> q) {
    const int l1 = q[0], l2 = q[1], l3 = q[2];
    for (int k = 1; k <= s1 - 1; ++k) {
      if (al.sum(r1 + k + 1) == a1 + a2 + b1 && al.zeros(r1 + k + 2, r1 + l1 + s1) &&
          al.zeros(r1 + l1 + l2 + s1 + 2, R)) {
        c[1] += B(A1, a1) * B(al.at(r1 + 1), a1 + b1 - al.sum(r1)) * B(l1 + s1 - k - 2, l1 - 1) *
                B(l3 + s2 - 1, l3);
      }
    }
  });
  for (int l1 = 1; l1 <= r2; ++l1) {
    const int l2 = r2 - l1;
    if (al.zeros(r1 + l1 + s1 + 2, R)) {
      c[2] += B(A1, a1) * B(al.at(r1 + 1), a1 + b1 - al.sum(r1)) *
              B(al.at(r1 + s1 + 1), a1 + a2 + b1 - al.sum(r1 + s1)) * B(l2 + s2 - 1, l2);
    }
  }
  for (int k = 1; k <= s2; ++k) {
    if (al.zeros(r1 + s1 + k + 2, R)) {
      c[3] += B(A1, a1) * B(al.at(r1 + 1), a1 + b1 - al.sum(r1)) * B(al.at(r1 + s1 + 1), b2) *
              B(r2 + s2 - k - 1, r2 - 1);
    }
  }

  // (v)-(vii): the first left block ends inside the first right block.
  splits(s1, {1, 0, 1}, [&](std::span<const int> kq) {
    const int k1 = kq[0], k2 = kq[1], k3 = kq[2];
    splits(r2, {1, 0, 0}, [&](std::span<const int> q) {
      const int l1 = q[0], l2 = q[1], l3 = q[2];
      for (int l = 1; l <= r1 - 1; ++l) {
        if (al.sum(l + 1) == a1 + b1 && al.zeros(l + 2, r1 + k1) &&
            al.zeros(r1 + k1 + k2 + 2, r1 + k1 + k2 + k3 + l1) && al.zeros(r1 + l1 + l2 + s1 + 2, R)) {
          c[4] += B(A1, a1) * B(r1 + k1 - l - 2, k1 - 1) *
                  kd(al.at(r1 + k1 + k2 + 1), a2 - al.sum(r1 + k1 + 1, r1 + k1 + k2)) *
                  B(k3 + l1 - 2, l1 - 1) * B(l3 + s2 - 1, l3);
        }
      }
    });
  });
  for (int l1 = 1; l1 <= r1 - 1; ++l1) {
    for (int l2 = 1; l2 <= r2; ++l2) {
      for (int k = 1; k <= s1 - 1; ++k) {
        if (al.sum(l1 + 1) == a1 + b1 && al.zeros(l1 + 2, k + r1) && al.zeros(r1 + l2 + s1 + 2, R)) {
          c[5] += B(A1, a1) * B(k + r1 - l1 - 2, k - 1) *
                  B(al.at(r1 + s1 + 1), a2 - al.sum(k + r1 + 1, r1 + s1)) *
                  B(r2 + s2 - l2 - 1, s2 - 1);
        }
      }
    }
  }
  for (int l = 1; l <= r1 - 1; ++l) {
    for (int k1 = 1; k1 <= s1 - 1; ++k1) {
      for (int k2 = 1; k2 <= s2; ++k2) {
        if (al.sum(l + 1) == a1 + b1 && al.zeros(l + 2, k1 + r1) && al.zeros(k2 + r1 + s1 + 2, R)) {
          c[6] += B(A1, a1) * B(k1 + r1 - l - 2, k1 - 1) * B(al.at(r1 + s1 + 1), b2) *
                  B(r2 + s2 - k2 - 1, r2 - 1);
        }
      }
    }
  }

  // (viii)-(ix): the first left block ends after the first right block.
  splits(r1, {1, 0, 1}, [&](std::span<const int> q) {
    const int l1 = q[0], l2 = q[1];
    if (al.sum(l1 + 1) != a1 + b1 || !al.zeros(l1 + 2, l1 + l2 + s1)) return;
    for (int l = 1; l <= r2; ++l) {
      if (al.zeros(r1 + s1 + l + 2, R)) {
        c[7] += B(A1, a1) * B(l2 + s1 - 2, l2) * B(al.at(r1 + s1 + 1), a2) *
                B(r2 + s2 - l - 1, s2 - 1);
      }
    }
    for (int k = 1; k <= s2; ++k) {
      if (al.zeros(k + r1 + s1 + 2, R)) {
        c[8] += B(A1, a1) * B(l2 + s1 - 2, l2) *
                B(al.at(r1 + s1 + 1), b2 - al.sum(l1 + l2 + s1 + 1, r1 + s1)) *
                B(r2 + s2 - k - 1, r2 - 1);
      }
    }
  });

  // (x): the first left block reaches into the second right block.
  splits(r1, {1, 0, 0, 1}, [&](std::span<const int> q) {
    const int l1 = q[0], l2 = q[1], l3 = q[2], l4 = q[3];
    if (al.sum(l1 + 1) != a1 + b1 || !al.zeros(l1 + 2, l1 + l2 + s1)) return;
    splits(s2, {1, 0, 0}, [&](std::span<const int> kq) {
      const int k1 = kq[0], k2 = kq[1], k3 = kq[2];
      if (al.zeros(l1 + l2 + l3 + s1 + 2, k1 + r1 + s1) && al.zeros(k1 + k2 + r1 + s1 + 2, R)) {
        c[9] += B(A1, a1) * B(l2 + s1 - 2, l2) *
                kd(al.at(l1 + l2 + l3 + s1 + 1), b2 - al.sum(l1 + l2 + s1 + 1, l1 + l2 + l3 + s1)) *
                B(k1 + l4 - 2, l4 - 1) * B(k3 + r2 - 1, k3);
      }
    });
  });
  return c;
}

namespace {

void require_res_2_2(const Res22Params& p) {
  require(p.a1 >= 0 && p.a2 >= 0 && p.b1 >= 0 && p.b2 >= 0, "exponents must be nonnegative");
  require(p.r1 >= 1 && p.r2 >= 1 && p.s1 >= 1 && p.s2 >= 1, "runs must be positive");
}

}  // namespace

LinComb expand_res_2_2(const Res22Params& p) {
  require_res_2_2(p);
  const Res22Params q = p.swapped();
  return expand_over_alphas(p.a1 + p.a2 + p.b1 + p.b2, p.r1 + p.r2 + p.s1 + p.s2,
                            [&](std::span<const int> al) {
                              Integer t = 0;
                              for (const Integer& v : res_2_2_cases(al, p)) t += v;
                              for (const Integer& v : res_2_2_cases(al, q)) t += v;
                              return t;
                            });
}

LinComb expand_res_2_2_case(int which, const Res22Params& p) {
  require(which >= 0 && which < 10, "case index out of range");
  require_res_2_2(p);
  return expand_over_alphas(p.a1 + p.a2 + p.b1 + p.b2, p.r1 + p.r2 + p.s1 + p.s2,
                            [&](std::span<const int> al) {
                              return res_2_2_cases(al, p)[static_cast<std::size_t>(which)];
                            });
}

LinComb expand_nfold(std::span<const Run> runs) {
  const int n = static_cast<int>(runs.size());
  require(n >= 1, "need at least one factor");
  if (n > kMaxFactors) {
    throw DomainError(ErrorCode::kTooManyFactors,
                      std::to_string(n) + " factors exceeds the limit of " + std::to_string(kMaxFactors));
  }
  for (const Run& run : runs) require(run.x_exp >= 0 && run.y_len >= 1, "need a_i >= 0 and r_i >= 1");

  int R = 0;
  int X = 0;
  for (const Run& run : runs) {
    R += run.y_len;
    X += run.x_exp;
  }
  // Every relabeling of the factors, applied to a and r together.
  std::vector<std::vector<Run>> perms;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Run> perm;
    for (int i : order) perm.push_back(runs[static_cast<std::size_t>(i)]);
    perms.push_back(std::move(perm));
  } while (std::next_permutation(order.begin(), order.end()));
  const auto ls = compositions(R, n);

  return expand_over_alphas(X, R, [&](std::span<const int> span) {
    const Alphas al(span);
    Integer t = 0;
    for (const Composition& l : ls) {
      if (!al.zeros(l.prefix(n - 1) + 2, R)) continue;
      for (const auto& perm : perms) {
        Integer term = 1;
        // Runs: y's of factor j placed among the later blocks.
        for (int j = 2; j <= n && term != 0; ++j) {
          long tail_l = R - l.prefix(j - 1);
          long tail_r = 0;
          for (int i = j + 1; i <= n; ++i) tail_r += perm[static_cast<std::size_t>(i - 1)].y_len;
          term *= P(tail_l - tail_r - 1, perm[static_cast<std::size_t>(j - 1)].y_len - 1);
        }
        // x's: factor j's x-block placed in front of its first y.
        long used = 0;
        for (int j = 1; j <= n - 1 && term != 0; ++j) {
          const int a_j = perm[static_cast<std::size_t>(j - 1)].x_exp;
          term *= P(al.sum(l.prefix(j - 1) + 1) - used, a_j);
          used += a_j;
        }
        t += term;
      }
    }
    return t;
  });
}

LinComb expand_nfold_depth1(std::span<const int> as) {
  const int n = static_cast<int>(as.size());
  require(n >= 1, "need at least one factor");
  if (n > kMaxFactors) {
    throw DomainError(ErrorCode::kTooManyFactors,
                      std::to_string(n) + " factors exceeds the limit of " + std::to_string(kMaxFactors));
  }
  require(std::all_of(as.begin(), as.end(), [](int a) { return a >= 0; }), "need a_i >= 0");
  std::vector<std::vector<int>> perms;
  // Permute positions so repeated exponents keep their multiplicity.
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> perm;
    for (int i : idx) perm.push_back(as[static_cast<std::size_t>(i)]);
    perms.push_back(std::move(perm));
  } while (std::next_permutation(idx.begin(), idx.end()));

  const int X = std::accumulate(as.begin(), as.end(), 0);
  return expand_over_alphas(X, n, [&](std::span<const int> span) {
    const Alphas al(span);
    Integer t = 0;
    for (const auto& perm : perms) {
      Integer term = 1;
      long used = 0;
      for (int j = 1; j <= n - 1 && term != 0; ++j) {
        term *= P(al.sum(j) - used, perm[static_cast<std::size_t>(j - 1)]);
        used += perm[static_cast<std::size_t>(j - 1)];
      }
      t += term;
    }
    return t;
  });
}

}  // namespace zetashuffle
