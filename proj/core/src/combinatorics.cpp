#include "zetashuffle/combinatorics.hpp"

#include <array>
#include <numeric>

#include "zetashuffle/error.hpp"

namespace zetashuffle {

namespace {

// Pascal's triangle; every entry with n < 67 fits in 64 bits.
constexpr int kTableRows = 67;

struct PascalTable {
  std::array<std::array<std::uint64_t, kTableRows>, kTableRows> rows{};
  PascalTable() {
    for (int n = 0; n < kTableRows; ++n) {
      rows[n][0] = 1;
      for (int k = 1; k <= n; ++k) rows[n][k] = rows[n - 1][k - 1] + (k < n ? rows[n - 1][k] : 0);
    }
  }
};

const PascalTable& pascal() {
  static const PascalTable table;
  return table;
}

}  // namespace

Integer binom(long n, long k) {
  if (n < 0) {
    throw DomainError(ErrorCode::kNegativeUpperIndex,
                      "binom(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  if (k < 0 || k > n) return 0;
  if (n < kTableRows) return Integer(pascal().rows[n][k]);
  if (k > n - k) k = n - k;
  Integer out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Integer run_binom(long n, long k) {
  if (k < 0) return 0;
  if (n == -1) return k == 0 ? Integer(1) : Integer(0);
  return binom(n, k);
}

bool vandermonde_check(int k, int l, int n) {
  Integer lhs = 0;
  for (int i = 0; i <= n; ++i) lhs += binom(k, i) * binom(l, n - i);
  return lhs == binom(k + l, n);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  prefix_.reserve(parts_.size() + 1);
  prefix_.push_back(0);
  for (int part : parts_) {
    if (part < 1) throw DomainError(ErrorCode::kInvalidArgument, "composition parts must be positive");
    prefix_.push_back(prefix_.back() + part);
  }
}

namespace {

void weak_rec(std::vector<int>& buf, std::size_t pos, int remaining, std::span<const int> minimums,
              const std::function<void(std::span<const int>)>& visit) {
  const std::size_t parts = buf.size();
  if (pos + 1 == parts) {
    buf[pos] = minimums[pos] + remaining;
    visit(buf);
    return;
  }
  for (int extra = 0; extra <= remaining; ++extra) {
    buf[pos] = minimums[pos] + extra;
    weak_rec(buf, pos + 1, remaining - extra, minimums, visit);
  }
}

}  // namespace

void for_each_bounded_composition(int total, std::span<const int> minimums,
                                  const std::function<void(std::span<const int>)>& visit) {
  if (minimums.empty()) {
    if (total == 0) visit({});
    return;
  }
  const int floor = std::accumulate(minimums.begin(), minimums.end(), 0);
  if (total < floor) return;
  std::vector<int> buf(minimums.size());
  weak_rec(buf, 0, total - floor, minimums, visit);
}

void for_each_weak_composition(int total, int parts,
                               const std::function<void(std::span<const int>)>& visit) {
  if (parts < 0 || total < 0) return;
  const std::vector<int> zeros(static_cast<std::size_t>(parts), 0);
  for_each_bounded_composition(total, zeros, visit);
}

std::vector<Composition> compositions(int total, int parts) {
  std::vector<Composition> out;
  if (parts < 1) return out;
  const std::vector<int> ones(static_cast<std::size_t>(parts), 1);
  for_each_bounded_composition(total, ones, [&](std::span<const int> c) {
    out.emplace_back(std::vector<int>(c.begin(), c.end()));
  });
  return out;
}

LinComb expand_over_alphas(int total, int parts,
                           const std::function<Integer(std::span<const int>)>& coeff) {
  LinComb out;
  for_each_weak_composition(total, parts, [&](std::span<const int> alphas) {
    Integer c = coeff(alphas);
    if (c != 0) out.add_term(word_from_exponents(alphas), c);
  });
  return out;
}

}  // namespace zetashuffle
