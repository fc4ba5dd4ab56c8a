#include "zetashuffle/shuffle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zetashuffle/error.hpp"

namespace zetashuffle {

namespace {

// Words of at most 62 letters packed as 1<<len | bits, first letter in the
// highest bit, x = 1. Every shuffle coefficient of a word that short fits in
// 64 bits (binom(62,31) < 2^59).
constexpr std::size_t kPackedMaxLength = 62;

using Packed = std::uint64_t;
using PackedTerms = std::vector<std::pair<Packed, std::uint64_t>>;  // sorted by key

Packed pack_suffix(const Word& w, std::size_t from) {
  Packed code = 1;
  for (std::size_t i = from; i < w.size(); ++i) code = (code << 1) | (w[i] == Letter::X ? 1U : 0U);
  return code;
}

Word unpack(Packed code) {
  const int len = std::bit_width(code) - 1;
  std::vector<Letter> letters(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    letters[static_cast<std::size_t>(i)] = ((code >> (len - 1 - i)) & 1U) ? Letter::X : Letter::Y;
  }
  return Word(std::move(letters));
}

Packed prepend(Letter letter, Packed code) {
  const int len = std::bit_width(code) - 1;
  const Packed body = code ^ (Packed{1} << len);
  return (Packed{1} << (len + 1)) | (Packed{letter == Letter::X} << len) | body;
}

// Both inputs are sorted; prepending one letter keeps that order and every
// word of a given length, so the two prepended lists merge like sorted runs.
PackedTerms merge_prepended(Letter lu, const PackedTerms& pu, Letter lv, const PackedTerms& pv) {
  PackedTerms out;
  out.reserve(pu.size() + pv.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pu.size() || j < pv.size()) {
    if (j == pv.size()) {
      out.emplace_back(prepend(lu, pu[i].first), pu[i].second);
      ++i;
    } else if (i == pu.size()) {
      out.emplace_back(prepend(lv, pv[j].first), pv[j].second);
      ++j;
    } else {
      const Packed ku = prepend(lu, pu[i].first);
      const Packed kv = prepend(lv, pv[j].first);
      if (ku < kv) {
        out.emplace_back(ku, pu[i++].second);
      } else if (kv < ku) {
        out.emplace_back(kv, pv[j++].second);
      } else {
        out.emplace_back(ku, pu[i++].second + pv[j++].second);
      }
    }
  }
  return out;
}

PackedTerms shuffle_packed(const Word& u, const Word& v) {
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  // row[j] holds u[i:] sh v[j:] for the current i; below[j] for i + 1.
  std::vector<PackedTerms> below(m + 1);
  std::vector<PackedTerms> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) below[j] = {{pack_suffix(v, j), 1}};
  for (std::size_t i = n; i-- > 0;) {
    row[m] = {{pack_suffix(u, i), 1}};
    for (std::size_t j = m; j-- > 0;) row[j] = merge_prepended(u[i], below[j], v[j], row[j + 1]);
    std::swap(row, below);
  }
  return std::move(below[0]);
}

LinComb prepend_all(Letter letter, const LinComb& p) {
  LinComb out;
  for (const auto& [w, c] : p.terms()) out.add_term(w.prepend(letter), c);
  return out;
}

Word suffix(const Word& w, std::size_t from) {
  const auto letters = w.letters();
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(from), letters.end()));
}

// Same recursion on arbitrary-length words with exact coefficients.
LinComb shuffle_generic(const Word& u, const Word& v) {
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  std::vector<LinComb> below(m + 1);
  std::vector<LinComb> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) below[j] = LinComb(suffix(v, j));
  for (std::size_t i = n; i-- > 0;) {
    row[m] = LinComb(suffix(u, i));
    for (std::size_t j = m; j-- > 0;) {
      row[j] = prepend_all(u[i], below[j]);
      row[j] += prepend_all(v[j], row[j + 1]);
    }
    std::swap(row, below);
  }
  return below[0];
}

}  // namespace

LinComb shuffle_recursive(const Word& u, const Word& v) {
  if (u.size() + v.size() > kPackedMaxLength) return shuffle_generic(u, v);
  LinComb out;
  for (const auto& [code, c] : shuffle_packed(u, v)) out.add_term(unpack(code), Integer(c));
  return out;
}

LinComb shuffle_permutation(const Word& u, const Word& v) {
  const std::size_t total = u.size() + v.size();
  // from_u[k] says whether position k takes the next letter of u.
  std::vector<bool> from_u(total, false);
  std::fill(from_u.begin(), from_u.begin() + static_cast<std::ptrdiff_t>(u.size()), true);
  LinComb out;
  do {
    std::vector<Letter> letters(total);
    std::size_t iu = 0;
    std::size_t iv = 0;
    for (std::size_t k = 0; k < total; ++k) letters[k] = from_u[k] ? u[iu++] : v[iv++];
    out.add_term(Word(std::move(letters)), 1);
  } while (std::prev_permutation(from_u.begin(), from_u.end()));
  return out;
}

LinComb shuffle_recursive(const LinComb& p, const Word& v) {
  std::unordered_map<Packed, Integer> packed;
  LinComb out;
  for (const auto& [w, c] : p.terms()) {
    if (w.size() + v.size() > kPackedMaxLength) {
      out += scale(c, shuffle_generic(w, v));
      continue;
    }
    for (const auto& [code, k] : shuffle_packed(w, v)) packed[code] += c * k;
  }
  for (const auto& [code, c] : packed) out.add_term(unpack(code), c);
  return out;
}

LinComb shuffle_nfold(std::span<const Word> ws) {
  if (ws.empty()) throw DomainError(ErrorCode::kInvalidArgument, "shuffle_nfold needs at least one word");
  LinComb acc(ws.front());
  for (std::size_t i = 1; i < ws.size(); ++i) acc = shuffle_recursive(acc, ws[i]);
  return acc;
}

}  // namespace zetashuffle
