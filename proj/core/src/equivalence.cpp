#include "zetashuffle/equivalence.hpp"

#include <chrono>
#include <json.hpp>

#include "zetashuffle/combinatorics.hpp"
#include "zetashuffle/error.hpp"
#include "zetashuffle/restricted.hpp"

namespace zetashuffle {

namespace {

// x^{e_1}y ... x^{e_{m-1}}y x^{e_m} y^{tail}, appended to `out`. A zero tail
// lets the last x-run merge with whatever follows.
void append_block(std::vector<Letter>& out, const std::vector<int>& exps, int tail) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(exps[i]), Letter::X);
    if (i + 1 < exps.size()) out.push_back(Letter::Y);
  }
  out.insert(out.end(), static_cast<std::size_t>(tail), Letter::Y);
}

Word block_word(const std::vector<int>& exps, int tail) {
  std::vector<Letter> out;
  append_block(out, exps, tail);
  return Word(std::move(out));
}

Word block_word(const std::vector<int>& e1, int t1, const std::vector<int>& e2, int t2) {
  std::vector<Letter> out;
  append_block(out, e1, t1);
  append_block(out, e2, t2);
  return Word(std::move(out));
}

std::vector<int> to_vec(std::span<const int> xs) { return {xs.begin(), xs.end()}; }

void require_positive(std::initializer_list<int> params) {
  for (int p : params) {
    if (p < 1) throw DomainError(ErrorCode::kPositivityRequired, "every parameter must be at least 1");
  }
}

}  // namespace

LinComb expand_lgm_1_1(int a, int r, int b, int s) {
  require_positive({a, r, b, s});
  LinComb out;
  for (int k = 0; k <= b; ++k) {
    for (int r1 = 0; r1 <= r; ++r1) {
      const int r2 = r - r1;
      const Integer c = binom(a - 1 + k, a - 1) * binom(r2 + s - 1, s - 1);
      for_each_weak_composition(b - k, r1 + 1, [&](std::span<const int> al) {
        auto e = to_vec(al);
        e[0] += a + k;
        out.add_term(block_word(e, r2 + s), c);
      });
    }
  }
  for (int l = 1; l <= s; ++l) {
    for (int A1 = 0; A1 <= a - 1; ++A1) {
      const int A2 = a - 1 - A1;
      const Integer c = binom(A1 + b - 1, b - 1) * binom(r + s - l, r);
      for_each_weak_composition(A2, l + 1, [&](std::span<const int> al) {
        auto e = to_vec(al);
        e[0] += A1 + b;
        e[static_cast<std::size_t>(l)] += 1;
        out.add_term(block_word(e, r + s - l), c);
      });
    }
  }
  return out;
}

LinComb lgm_1_2_sum(int which, int a, int r, int b1, int s1, int b2, int s2) {
  require_positive({a, r, b1, s1, b2, s2});
  if (which < 1 || which > 4) throw DomainError(ErrorCode::kInvalidArgument, "sum index must be 1..4");
  LinComb out;
  switch (which) {
    case 1:
      for (int k = 0; k <= b1; ++k) {
        for_each_weak_composition(r, 4, [&](std::span<const int> rs) {
          const int r1 = rs[0], r2 = rs[1], r3 = rs[2], r4 = rs[3];
          const Integer c = binom(a - 1 + k, a - 1) * binom(r2 + s1 - 1, s1 - 1) * binom(r4 + s2 - 1, s2 - 1);
          for_each_weak_composition(b1 - k, r1 + 1, [&](std::span<const int> al) {
            for_each_weak_composition(b2 - 1, r3 + 1, [&](std::span<const int> at) {
              auto e1 = to_vec(al);
              auto e2 = to_vec(at);
              e1[0] += a + k;
              e2[0] += 1;
              out.add_term(block_word(e1, r2 + s1, e2, r4 + s2), c);
            });
          });
        });
      }
      break;
    case 2:
      for (int l = 1; l <= s1; ++l) {
        for (int A1 = 0; A1 <= a - 1; ++A1) {
          const int A2 = a - 1 - A1;
          for_each_weak_composition(r, 3, [&](std::span<const int> rs) {
            const int r1 = rs[0], r2 = rs[1], r3 = rs[2];
            const Integer c =
                binom(A1 + b1 - 1, b1 - 1) * binom(r1 + s1 - l, s1 - l) * binom(r3 + s2 - 1, s2 - 1);
            for_each_weak_composition(A2, l + 1, [&](std::span<const int> al) {
              for_each_weak_composition(b2 - 1, r2 + 1, [&](std::span<const int> at) {
                auto e1 = to_vec(al);
                auto e2 = to_vec(at);
                e1[0] += A1 + b1;
                e1[static_cast<std::size_t>(l)] += 1;
                e2[0] += 1;
                out.add_term(block_word(e1, r1 + s1 - l, e2, r3 + s2), c);
              });
            });
          });
        }
      }
      break;
    case 3:
      for (int k = 1; k <= b2; ++k) {
        for_each_weak_composition(a - 1, 3, [&](std::span<const int> As) {
          const int A1 = As[0], A2 = As[1], A3 = As[2];
          for_each_weak_composition(r, 2, [&](std::span<const int> rs) {
            const int r1 = rs[0], r2 = rs[1];
            const Integer c =
                binom(A1 + b1 - 1, b1 - 1) * binom(A3 + k - 1, k - 1) * binom(r2 + s2 - 1, s2 - 1);
            for_each_weak_composition(A2, s1 + 1, [&](std::span<const int> al) {
              for_each_weak_composition(b2 - k, r1 + 1, [&](std::span<const int> at) {
                std::vector<int> e(al.begin(), al.begin() + s1);
                e[0] += A1 + b1;
                e.push_back(al[static_cast<std::size_t>(s1)] + at[0] + A3 + k + 1);
                e.insert(e.end(), at.begin() + 1, at.end());
                out.add_term(block_word(e, r2 + s2), c);
              });
            });
          });
        });
      }
      break;
    default:
      for (int l = 1; l <= s2; ++l) {
        for_each_weak_composition(a - 1, 4, [&](std::span<const int> As) {
          const int A1 = As[0], A2 = As[1], A3 = As[2], A4 = As[3];
          const Integer c =
              binom(A1 + b1 - 1, b1 - 1) * binom(A3 + b2 - 1, b2 - 1) * binom(r + s2 - l, r);
          for_each_weak_composition(A2, s1, [&](std::span<const int> al) {
            for_each_weak_composition(A4, l + 1, [&](std::span<const int> at) {
              auto e1 = to_vec(al);
              auto e2 = to_vec(at);
              e1[0] += A1 + b1;
              e2[0] += A3 + b2;
              e2[static_cast<std::size_t>(l)] += 1;
              out.add_term(block_word(e1, 1, e2, r + s2 - l), c);
            });
          });
        });
      }
      break;
  }
  return out;
}

LinComb expand_lgm_1_2(int a, int r, int b1, int s1, int b2, int s2) {
  LinComb out;
  for (int which = 1; which <= 4; ++which) out += lgm_1_2_sum(which, a, r, b1, s1, b2, s2);
  return out;
}

const char* to_string(EquivalencePair pair) noexcept {
  return pair == EquivalencePair::kA ? "A" : "B";
}

std::vector<GridPoint> EquivalenceReport::failures() const {
  std::vector<GridPoint> out;
  for (const auto& point : points) {
    if (!point.pass) out.push_back(point);
  }
  return out;
}

EquivalenceReport check_equivalence(EquivalencePair pair, const GridBounds& grid) {
  const auto start = std::chrono::steady_clock::now();
  EquivalenceReport report;
  report.pair = pair;
  report.grid = grid;
  const int arity = pair == EquivalencePair::kA ? 4 : 6;
  if (grid.max_param >= 1) {
    std::vector<int> params(static_cast<std::size_t>(arity), 1);
    while (true) {
      int length = 0;
      for (int p : params) length += p;
      if (length <= grid.max_length) {
        bool pass;
        if (pair == EquivalencePair::kA) {
          pass = expand_lgm_1_1(params[0], params[1], params[2], params[3]) ==
                 expand_res_1_1(params[0], params[1], params[2], params[3]);
        } else {
          pass = expand_lgm_1_2(params[0], params[1], params[2], params[3], params[4], params[5]) ==
                 expand_res_1_2(params[0], params[1], params[2], params[3], params[4], params[5]);
        }
        report.points.push_back({params, pass});
      }
      // Odometer over [1, max_param]^arity, last coordinate fastest.
      int i = arity - 1;
      while (i >= 0 && params[static_cast<std::size_t>(i)] == grid.max_param) {
        params[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++params[static_cast<std::size_t>(i)];
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const EquivalenceReport& report, bool timing) {
  nlohmann::ordered_json doc;
  doc["pair"] = to_string(report.pair);
  doc["grid"] = {{"max_param", report.grid.max_param}, {"max_length", report.grid.max_length}};
  doc["checked"] = report.points.size();
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& point : report.failures()) failures.push_back(point.params);
  doc["failures"] = std::move(failures);
  if (timing) doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump();
}

}  // namespace zetashuffle
