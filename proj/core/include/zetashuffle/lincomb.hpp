#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>

#include "zetashuffle/words.hpp"

namespace zetashuffle {

using Integer = boost::multiprecision::cpp_int;

/// Finite Z-linear combination of words. Zero coefficients are never stored;
/// iteration follows CanonicalLess.
class LinComb {
 public:
  using Terms = std::map<Word, Integer, CanonicalLess>;

  LinComb() = default;
  explicit LinComb(const Word& w, Integer coeff = 1) { add_term(w, std::move(coeff)); }

  void add_term(const Word& w, const Integer& coeff);

  Integer coefficient(const Word& w) const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  LinComb& operator+=(const LinComb& rhs);

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

LinComb add(const LinComb& p, const LinComb& q);
LinComb scale(const Integer& c, const LinComb& p);
Integer coefficient_sum(const LinComb& p);

enum class Format { kPlain, kLatex, kJson };

/// Parses "plain", "latex" or "json".
Format parse_format(std::string_view name);

/// Latex output switches to zeta notation when `zeta_notation` is set and
/// every word is admissible; plain and json ignore the flag.
std::string render(const LinComb& p, Format format, bool zeta_notation = true);

/// {"terms":[{"word":"x^2y^2","coeff":"4"}, ...]}
std::string to_json(const LinComb& p);
/// Inverse of to_json. Throws ParseError on malformed input.
LinComb lincomb_from_json(std::string_view text);

}  // namespace zetashuffle
