#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zetashuffle {

enum class Letter : std::uint8_t { X, Y };

/// A finite word over the alphabet {x, y}. The empty word is the unit 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  std::size_t count(Letter letter) const noexcept;

  /// Concatenation (used for building words; not exposed as an algebra
  /// product on linear combinations).
  Word operator+(const Word& rhs) const;
  Word prepend(Letter letter) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Total order used for every canonical listing: shorter words first, then
/// lexicographic with y < x.
struct CanonicalLess {
  bool operator()(const Word& lhs, const Word& rhs) const noexcept;
};

/// x^{a_1} y x^{a_2} y ... x^{a_r} y with every a_i >= 0 and r >= 1.
class ExponentForm {
 public:
  explicit ExponentForm(std::vector<int> exps);

  std::span<const int> exps() const noexcept { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  /// Number of y's.
  int depth() const noexcept { return static_cast<int>(exps_.size()); }
  /// Number of x's.
  int x_count() const noexcept;
  int length() const noexcept { return x_count() + depth(); }

  friend bool operator==(const ExponentForm&, const ExponentForm&) = default;

 private:
  std::vector<int> exps_;
};

/// Argument (k_1, ..., k_n) of a convergent multiple zeta value.
class MzvIndex {
 public:
  /// Throws DomainError(kNotAdmissible) unless nonempty, all k_i >= 1 and
  /// k_1 >= 2.
  explicit MzvIndex(std::vector<int> ks);

  std::span<const int> ks() const noexcept { return ks_; }
  int operator[](std::size_t i) const { return ks_[i]; }
  int depth() const noexcept { return static_cast<int>(ks_.size()); }
  int weight() const noexcept;

  friend bool operator==(const MzvIndex&, const MzvIndex&) = default;

 private:
  std::vector<int> ks_;
};

inline constexpr long kDefaultExponentCap = 1'000'000;

/// Grammar: term+ with term := ('x' | 'y') ('^' uint)?, whitespace ignored.
/// Throws ParseError on bad syntax or when an exponent exceeds `exponent_cap`.
Word parse_word(std::string_view text, long exponent_cap = kDefaultExponentCap);

/// Canonical form: lowercase, runs collapsed ("x^2yxy"); empty word is "1".
std::string print_word(const Word& w);

/// Empty, or starts with x and ends with y.
bool is_admissible(const Word& w) noexcept;

/// Nonempty and ends with y.
bool in_h1(const Word& w) noexcept;

ExponentForm to_exponent_form(const Word& w);
Word from_exponent_form(const ExponentForm& form);
Word word_from_exponents(std::span<const int> exps);

/// k_i = a_i + 1. Throws DomainError(kNotAdmissible) for inadmissible or
/// empty words.
MzvIndex word_to_mzv(const Word& w);
Word mzv_to_word(const MzvIndex& idx);

/// "3,1" style text. Throws ParseError on syntax, DomainError when k_1 < 2.
MzvIndex parse_mzv_index(std::string_view text);
std::string print_mzv_index(const MzvIndex& idx);

/// Every word of the given length, in canonical order.
std::vector<Word> all_words(std::size_t length);

}  // namespace zetashuffle

template <>
struct std::hash<zetashuffle::Word> {
  std::size_t operator()(const zetashuffle::Word& w) const noexcept;
};
