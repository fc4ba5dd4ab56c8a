#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zetashuffle {

enum class Suite {
  kGeneral,
  kSpecial,
  kRes11,
  kRes12,
  kRes22,
  kNfold,
  kAppendixA,
  kAppendixB,
  kAlgebra,
  kAll,
};

const char* to_string(Suite suite) noexcept;
/// Throws DomainError(kInvalidArgument) on an unknown name.
Suite parse_suite(std::string_view name);

struct SuiteReport {
  std::string suite;
  int max_weight = 0;
  long checked = 0;
  long failed = 0;
  std::optional<std::string> first_failure;
  double elapsed_ms = 0.0;

  bool pass() const { return failed == 0; }
};

/// Exhaustive oracle comparison for every instance of total word length
/// <= max_weight. kAll expands to every other suite in declaration order.
/// Instances are spread over `threads` workers (0 = hardware concurrency);
/// the report is independent of the thread count.
std::vector<SuiteReport> run_suite(Suite suite, int max_weight, unsigned threads = 0);

/// elapsed_ms is left out when `timing` is false.
std::string to_json(const std::vector<SuiteReport>& reports, bool timing = true);

}  // namespace zetashuffle
