#include "zetashuffle/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "zetashuffle/error.hpp"

namespace zetashuffle {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotInH1: return "NotInH1";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kNegativeUpperIndex: return "NegativeUpperIndex";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kPositivityRequired: return "PositivityRequired";
    case ErrorCode::kTermsTooSmall: return "TermsTooSmall";
    case ErrorCode::kTooManyFactors: return "TooManyFactors";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::size_t Word::count(Letter letter) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> out;
  out.reserve(size() + rhs.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::prepend(Letter letter) const {
  std::vector<Letter> out;
  out.reserve(size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool CanonicalLess::operator()(const Word& lhs, const Word& rhs) const noexcept {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) return lhs[i] == Letter::Y;
  }
  return false;
}

ExponentForm::ExponentForm(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) {
    throw DomainError(ErrorCode::kNotInH1, "exponent form needs at least one y");
  }
  if (std::any_of(exps_.begin(), exps_.end(), [](int a) { return a < 0; })) {
    throw DomainError(ErrorCode::kInvalidArgument, "exponents must be nonnegative");
  }
}

int ExponentForm::x_count() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

MzvIndex::MzvIndex(std::vector<int> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) {
    throw DomainError(ErrorCode::kNotAdmissible, "empty MZV index");
  }
  if (std::any_of(ks_.begin(), ks_.end(), [](int k) { return k < 1; })) {
    throw DomainError(ErrorCode::kNotAdmissible, "MZV index entries must be positive");
  }
  if (ks_.front() < 2) {
    throw DomainError(ErrorCode::kNotAdmissible, "k_1 must be at least 2");
  }
}

int MzvIndex::weight() const noexcept {
  return std::accumulate(ks_.begin(), ks_.end(), 0);
}

Word parse_word(std::string_view text, long exponent_cap) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    const char c = text[i];
    Letter letter;
    if (c == 'x') {
      letter = Letter::X;
    } else if (c == 'y') {
      letter = Letter::Y;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
    skip_space();
    long repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      const std::size_t start = i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected exponent after '^'", i);
      }
      repeat = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        repeat = repeat * 10 + (text[i] - '0');
        if (repeat > exponent_cap) {
          throw ParseError("exponent exceeds cap " + std::to_string(exponent_cap), start);
        }
        ++i;
      }
      skip_space();
    }
    letters.insert(letters.end(), static_cast<std::size_t>(repeat), letter);
  }
  return Word(std::move(letters));
}

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += (w[i] == Letter::X) ? 'x' : 'y';
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool is_admissible(const Word& w) noexcept {
  return w.empty() || (w.front() == Letter::X && w.back() == Letter::Y);
}

bool in_h1(const Word& w) noexcept { return !w.empty() && w.back() == Letter::Y; }

ExponentForm to_exponent_form(const Word& w) {
  if (!in_h1(w)) {
    throw DomainError(ErrorCode::kNotInH1, "'" + print_word(w) + "' does not end with y");
  }
  std::vector<int> exps;
  int run = 0;
  for (Letter letter : w.letters()) {
    if (letter == Letter::X) {
      ++run;
    } else {
      exps.push_back(run);
      run = 0;
    }
  }
  return ExponentForm(std::move(exps));
}

Word word_from_exponents(std::span<const int> exps) {
  std::vector<Letter> letters;
  for (int a : exps) {
    letters.insert(letters.end(), static_cast<std::size_t>(a), Letter::X);
    letters.push_back(Letter::Y);
  }
  return Word(std::move(letters));
}

Word from_exponent_form(const ExponentForm& form) { return word_from_exponents(form.exps()); }

MzvIndex word_to_mzv(const Word& w) {
  if (w.empty() || !is_admissible(w)) {
    throw DomainError(ErrorCode::kNotAdmissible, "'" + print_word(w) + "' is not admissible");
  }
  const ExponentForm form = to_exponent_form(w);
  std::vector<int> ks(form.exps().begin(), form.exps().end());
  for (int& k : ks) ++k;
  return MzvIndex(std::move(ks));
}

Word mzv_to_word(const MzvIndex& idx) {
  std::vector<int> exps(idx.ks().begin(), idx.ks().end());
  for (int& a : exps) --a;
  return word_from_exponents(exps);
}

MzvIndex parse_mzv_index(std::string_view text) {
  std::vector<int> ks;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected a positive integer", i);
    }
    long k = 0;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      k = k * 10 + (text[i] - '0');
      if (k > 1'000'000) throw ParseError("index entry too large", start);
      ++i;
    }
    if (k == 0) throw ParseError("index entries must be positive", start);
    ks.push_back(static_cast<int>(k));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    ++i;
  }
  return MzvIndex(std::move(ks));
}

std::string print_mzv_index(const MzvIndex& idx) {
  std::ostringstream out;
  for (std::size_t i = 0; i < idx.ks().size(); ++i) {
    if (i) out << ',';
    out << idx[i];
  }
  return out.str();
}

std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  // Counting with bit 1 = x enumerates y < x lexicographically.
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    std::vector<Letter> letters(length);
    for (std::size_t i = 0; i < length; ++i) {
      const bool bit = (mask >> (length - 1 - i)) & 1U;
      letters[i] = bit ? Letter::X : Letter::Y;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace zetashuffle

std::size_t std::hash<zetashuffle::Word>::operator()(const zetashuffle::Word& w) const noexcept {
  std::size_t h = w.size() * 0x9E3779B97F4A7C15ULL;
  for (zetashuffle::Letter letter : w.letters()) {
    h = (h << 1) ^ (h >> 63) ^ static_cast<std::size_t>(letter == zetashuffle::Letter::Y);
  }
  return h;
}
