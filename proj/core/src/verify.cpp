#include "zetashuffle/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "zetashuffle/closed_form.hpp"
#include "zetashuffle/combinatorics.hpp"
#include "zetashuffle/equivalence.hpp"
#include "zetashuffle/error.hpp"
#include "zetashuffle/restricted.hpp"
#include "zetashuffle/shuffle.hpp"

namespace zetashuffle {

namespace {

struct Task {
  std::string label;
  std::function<bool()> check;
};

std::string tuple_text(std::span<const int> xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << ')';
  return out.str();
}

Word ef(std::span<const int> exps) { return word_from_exponents(exps); }

// Every exponent form with total word length exactly `length`.
std::vector<std::vector<int>> exponent_forms(int length) {
  std::vector<std::vector<int>> out;
  for (int depth = 1; depth <= length; ++depth) {
    for_each_weak_composition(length - depth, depth, [&](std::span<const int> e) {
      out.emplace_back(e.begin(), e.end());
    });
  }
  return out;
}

// Parameter tuples laid out as (x_1, run_1, x_2, run_2, ...): even slots
// >= 0, odd slots >= 1, total <= max_weight.
void for_each_run_params(int arity, int max_weight, const std::function<void(std::span<const int>)>& f) {
  std::vector<int> mins(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) mins[static_cast<std::size_t>(i)] = i % 2;
  for (int total = 0; total <= max_weight; ++total) for_each_bounded_composition(total, mins, f);
}

void for_each_positive(int arity, int max_weight, const std::function<void(std::span<const int>)>& f) {
  const std::vector<int> ones(static_cast<std::size_t>(arity), 1);
  for (int total = 0; total <= max_weight; ++total) for_each_bounded_composition(total, ones, f);
}

Word runs_word(std::span<const int> p) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) runs.push_back({p[i], p[i + 1]});
  return run_word(runs);
}

std::vector<Task> general_tasks(int w) {
  std::vector<Task> tasks;
  for (int lu = 1; lu <= w; ++lu) {
    for (int lv = 1; lu + lv <= w; ++lv) {
      const auto us = exponent_forms(lu);
      const auto vs = exponent_forms(lv);
      for (const auto& a : us) {
        for (const auto& b : vs) {
          tasks.push_back({"general " + tuple_text(a) + " " + tuple_text(b), [a, b] {
                             return expand_general(ExponentForm(a), ExponentForm(b)) ==
                                    shuffle_recursive(ef(a), ef(b));
                           }});
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> special_tasks(int w) {
  std::vector<Task> tasks;
  for (int a = 0; a + 2 <= w; ++a) {
    for (int b = 0; a + b + 2 <= w; ++b) {
      tasks.push_back({"euler (" + std::to_string(a) + "," + std::to_string(b) + ")", [a, b] {
                         const int ea[] = {a};
                         const int eb[] = {b};
                         return expand_euler(a, b) == shuffle_recursive(ef(ea), ef(eb));
                       }});
    }
  }
  for (int a = 0; a + 2 <= w; ++a) {
    for (int lv = 1; a + 1 + lv <= w; ++lv) {
      for (const auto& b : exponent_forms(lv)) {
        tasks.push_back({"1_s " + std::to_string(a) + " " + tuple_text(b), [a, b] {
                           const int ea[] = {a};
                           return expand_1_s(a, ExponentForm(b)) == shuffle_recursive(ef(ea), ef(b));
                         }});
      }
    }
  }
  const std::pair<SmallCase, const char*> cases[] = {{SmallCase::kC12, "c12"},
                                                     {SmallCase::kC13, "c13"},
                                                     {SmallCase::kC22, "c22"},
                                                     {SmallCase::kC23, "c23"},
                                                     {SmallCase::kC33, "c33"}};
  for (const auto& [c, name] : cases) {
    const auto [r, s] = small_case_shape(c);
    for (int x = 0; x + r + s <= w; ++x) {
      for_each_weak_composition(x, r + s, [&, c = c, r = r, name = name](std::span<const int> p) {
        std::vector<int> params(p.begin(), p.end());
        tasks.push_back({std::string(name) + " " + tuple_text(params), [c, r, params] {
                           const std::span<const int> all(params);
                           return expand_small(c, params) ==
                                  shuffle_recursive(ef(all.first(static_cast<std::size_t>(r))),
                                                    ef(all.subspan(static_cast<std::size_t>(r))));
                         }});
      });
    }
  }
  return tasks;
}

std::vector<Task> res11_tasks(int w) {
  std::vector<Task> tasks;
  for_each_run_params(4, w, [&](std::span<const int> p) {
    std::vector<int> q(p.begin(), p.end());
    tasks.push_back({"res11 " + tuple_text(q), [q] {
                       const std::span<const int> all(q);
                       return expand_res_1_1(q[0], q[1], q[2], q[3]) ==
                              shuffle_recursive(runs_word(all.first(2)), runs_word(all.subspan(2)));
                     }});
  });
  return tasks;
}

std::vector<Task> res12_tasks(int w) {
  std::vector<Task> tasks;
  for_each_run_params(6, w, [&](std::span<const int> p) {
    std::vector<int> q(p.begin(), p.end());
    tasks.push_back({"res12 " + tuple_text(q), [q] {
                       const std::span<const int> all(q);
                       return expand_res_1_2(q[0], q[1], q[2], q[3], q[4], q[5]) ==
                              shuffle_recursive(runs_word(all.first(2)), runs_word(all.subspan(2)));
                     }});
  });
  return tasks;
}

std::vector<Task> res22_tasks(int w) {
  std::vector<Task> tasks;
  for_each_run_params(8, w, [&](std::span<const int> p) {
    std::vector<int> q(p.begin(), p.end());
    tasks.push_back({"res22 " + tuple_text(q), [q] {
                       const std::span<const int> all(q);
                       const Res22Params params{q[0], q[1], q[2], q[3], q[4], q[5], q[6], q[7]};
                       return expand_res_2_2(params) ==
                              shuffle_recursive(runs_word(all.first(4)), runs_word(all.subspan(4)));
                     }});
  });
  return tasks;
}

std::vector<Task> nfold_tasks(int w) {
  std::vector<Task> tasks;
  for (int n = 1; n <= 3; ++n) {
    for_each_run_params(2 * n, w, [&](std::span<const int> p) {
      std::vector<int> q(p.begin(), p.end());
      tasks.push_back({"nfold " + tuple_text(q), [q] {
                         std::vector<Run> runs;
                         std::vector<Word> words;
                         for (std::size_t i = 0; i < q.size(); i += 2) {
                           runs.push_back({q[i], q[i + 1]});
                           words.push_back(run_word(std::span<const Run>(&runs.back(), 1)));
                         }
                         return expand_nfold(runs) == shuffle_nfold(words);
                       }});
    });
    for (int x = 0; x + n <= w; ++x) {
      for_each_weak_composition(x, n, [&](std::span<const int> p) {
        std::vector<int> as(p.begin(), p.end());
        tasks.push_back({"nfold_depth1 " + tuple_text(as), [as] {
                           std::vector<Run> runs;
                           for (int a : as) runs.push_back({a, 1});
                           return expand_nfold_depth1(as) == expand_nfold(runs);
                         }});
      });
    }
  }
  return tasks;
}

std::vector<Task> appendix_a_tasks(int w) {
  std::vector<Task> tasks;
  for_each_positive(4, w, [&](std::span<const int> p) {
    std::vector<int> q(p.begin(), p.end());
    tasks.push_back({"appendixA " + tuple_text(q), [q] {
                       const LinComb lgm = expand_lgm_1_1(q[0], q[1], q[2], q[3]);
                       const Run u[] = {{q[0], q[1]}};
                       const Run v[] = {{q[2], q[3]}};
                       return lgm == expand_res_1_1(q[0], q[1], q[2], q[3]) &&
                              lgm == shuffle_recursive(run_word(u), run_word(v));
                     }});
  });
  return tasks;
}

std::vector<Task> appendix_b_tasks(int w) {
  std::vector<Task> tasks;
  for_each_positive(6, w, [&](std::span<const int> p) {
    std::vector<int> q(p.begin(), p.end());
    tasks.push_back({"appendixB " + tuple_text(q), [q] {
                       const LinComb lgm = expand_lgm_1_2(q[0], q[1], q[2], q[3], q[4], q[5]);
                       const Run u[] = {{q[0], q[1]}};
                       const Run v[] = {{q[2], q[3]}, {q[4], q[5]}};
                       return lgm == expand_res_1_2(q[0], q[1], q[2], q[3], q[4], q[5]) &&
                              lgm == shuffle_recursive(run_word(u), run_word(v));
                     }});
  });
  return tasks;
}

bool pair_properties(const Word& u, const Word& v) {
  const LinComb uv = shuffle_recursive(u, v);
  if (uv != shuffle_permutation(u, v)) return false;
  if (uv != shuffle_recursive(v, u)) return false;
  if (coefficient_sum(uv) != binom(static_cast<long>(u.size() + v.size()), static_cast<long>(u.size()))) {
    return false;
  }
  const std::size_t ys = u.count(Letter::Y) + v.count(Letter::Y);
  const bool h1 = in_h1(u) && in_h1(v);
  const bool h0 = is_admissible(u) && is_admissible(v);
  for (const auto& [w, c] : uv.terms()) {
    if (w.size() != u.size() + v.size() || w.count(Letter::Y) != ys) return false;
    if (h1 && !in_h1(w)) return false;
    if (h0 && !is_admissible(w)) return false;
  }
  return true;
}

std::vector<Task> algebra_tasks(int w) {
  std::vector<Task> tasks;
  for (int lu = 0; lu <= w; ++lu) {
    for (int lv = 0; lu + lv <= w; ++lv) {
      const auto us = all_words(static_cast<std::size_t>(lu));
      const auto vs = all_words(static_cast<std::size_t>(lv));
      for (const Word& u : us) {
        for (const Word& v : vs) {
          tasks.push_back({"pair " + print_word(u) + " " + print_word(v), [u, v] { return pair_properties(u, v); }});
        }
      }
    }
  }
  // Associativity one letter below the pair bound.
  for (int lu = 0; lu <= w - 1; ++lu) {
    for (int lv = 0; lu + lv <= w - 1; ++lv) {
      for (const Word& u : all_words(static_cast<std::size_t>(lu))) {
        for (const Word& v : all_words(static_cast<std::size_t>(lv))) {
          // One task per (u, v) covers every w of admissible length.
          const int lw_max = w - 1 - lu - lv;
          tasks.push_back({"assoc " + print_word(u) + " " + print_word(v), [u, v, lw_max] {
                             const LinComb uv = shuffle_recursive(u, v);
                             for (int lw = 0; lw <= lw_max; ++lw) {
                               for (const Word& x : all_words(static_cast<std::size_t>(lw))) {
                                 LinComb right;
                                 const LinComb vx = shuffle_recursive(v, x);
                                 for (const auto& [t, c] : vx.terms()) {
                                   right += scale(c, shuffle_recursive(u, t));
                                 }
                                 if (shuffle_recursive(uv, x) != right) return false;
                               }
                             }
                             return true;
                           }});
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> tasks_for(Suite suite, int w) {
  switch (suite) {
    case Suite::kGeneral: return general_tasks(w);
    case Suite::kSpecial: return special_tasks(w);
    case Suite::kRes11: return res11_tasks(w);
    case Suite::kRes12: return res12_tasks(w);
    case Suite::kRes22: return res22_tasks(w);
    case Suite::kNfold: return nfold_tasks(w);
    case Suite::kAppendixA: return appendix_a_tasks(w);
    case Suite::kAppendixB: return appendix_b_tasks(w);
    case Suite::kAlgebra: return algebra_tasks(w);
    case Suite::kAll: break;
  }
  return {};
}

// Runs every task; results land in task order whatever the thread count.
std::vector<char> run_pool(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<char> ok(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        ok[i] = tasks[i].check() ? 1 : 0;
      } catch (const std::exception&) {
        ok[i] = 0;
      }
    }
  };
  if (threads <= 1 || tasks.size() < 2) {
    worker();
    return ok;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return ok;
}

SuiteReport run_one(Suite suite, int max_weight, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = tasks_for(suite, max_weight);
  const std::vector<char> ok = run_pool(tasks, threads);
  SuiteReport report;
  report.suite = to_string(suite);
  report.max_weight = max_weight;
  report.checked = static_cast<long>(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (ok[i]) continue;
    if (report.failed++ == 0) report.first_failure = tasks[i].label;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

constexpr Suite kEverySuite[] = {Suite::kGeneral, Suite::kSpecial,   Suite::kRes11,
                                 Suite::kRes12,   Suite::kRes22,     Suite::kNfold,
                                 Suite::kAppendixA, Suite::kAppendixB, Suite::kAlgebra};

}  // namespace

const char* to_string(Suite suite) noexcept {
  switch (suite) {
    case Suite::kGeneral: return "general";
    case Suite::kSpecial: return "special";
    case Suite::kRes11: return "res11";
    case Suite::kRes12: return "res12";
    case Suite::kRes22: return "res22";
    case Suite::kNfold: return "nfold";
    case Suite::kAppendixA: return "appendixA";
    case Suite::kAppendixB: return "appendixB";
    case Suite::kAlgebra: return "algebra";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : kEverySuite) {
    if (name == to_string(s)) return s;
  }
  if (name == "all") return Suite::kAll;
  throw DomainError(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_suite(Suite suite, int max_weight, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<SuiteReport> out;
  if (suite == Suite::kAll) {
    for (Suite s : kEverySuite) out.push_back(run_one(s, max_weight, threads));
  } else {
    out.push_back(run_one(suite, max_weight, threads));
  }
  return out;
}

std::string to_json(const std::vector<SuiteReport>& reports, bool timing) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  bool pass = true;
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["max_weight"] = r.max_weight;
    j["checked"] = r.checked;
    j["failed"] = r.failed;
    j["first_failure"] = r.first_failure ? nlohmann::ordered_json(*r.first_failure) : nlohmann::ordered_json();
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    suites.push_back(std::move(j));
    pass = pass && r.pass();
  }
  nlohmann::ordered_json doc;
  doc["suites"] = std::move(suites);
  doc["pass"] = pass;
  return doc.dump();
}

}  // namespace zetashuffle
