#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetashuffle {

// Malformed textual input (words, MZV indices). Carries the byte offset of
// the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

enum class ErrorCode {
  kNotInH1,
  kNotAdmissible,
  kNegativeUpperIndex,
  kDimensionMismatch,
  kPositivityRequired,
  kTermsTooSmall,
  kTooManyFactors,
  kInvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

// Well-formed input outside an operation's domain.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zetashuffle
