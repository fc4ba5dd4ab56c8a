#include "zetashuffle/lincomb.hpp"

#include <json.hpp>

#include "zetashuffle/error.hpp"

namespace zetashuffle {

void LinComb::add_term(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LinComb::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

LinComb add(const LinComb& p, const LinComb& q) {
  LinComb out = p;
  out += q;
  return out;
}

LinComb scale(const Integer& c, const LinComb& p) {
  LinComb out;
  if (c == 0) return out;
  for (const auto& [w, coeff] : p.terms()) out.add_term(w, coeff * c);
  return out;
}

Integer coefficient_sum(const LinComb& p) {
  Integer total = 0;
  for (const auto& [w, c] : p.terms()) total += c;
  return total;
}

Format parse_format(std::string_view name) {
  if (name == "plain") return Format::kPlain;
  if (name == "latex") return Format::kLatex;
  if (name == "json") return Format::kJson;
  throw DomainError(ErrorCode::kInvalidArgument, "unknown format '" + std::string(name) + "'");
}

namespace {

std::string latex_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += (w[i] == Letter::X) ? 'x' : 'y';
    if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return out;
}

std::string latex_zeta(const Word& w) {
  if (w.empty()) return "1";
  return "\\zeta(" + print_mzv_index(word_to_mzv(w)) + ")";
}

std::string render_plain(const LinComb& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += print_word(w);
    } else {
      out += mag.str() + "*" + print_word(w);
    }
  }
  return out;
}

std::string render_latex(const LinComb& p, bool zeta_notation) {
  if (p.is_zero()) return "0";
  bool zeta = zeta_notation;
  for (const auto& [w, c] : p.terms()) {
    if (!is_admissible(w)) zeta = false;
  }
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (w.empty()) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += zeta ? latex_zeta(w) : latex_word(w);
  }
  return out;
}

}  // namespace

std::string render(const LinComb& p, Format format, bool zeta_notation) {
  switch (format) {
    case Format::kPlain: return render_plain(p);
    case Format::kLatex: return render_latex(p, zeta_notation);
    case Format::kJson: return to_json(p);
  }
  return {};
}

std::string to_json(const LinComb& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["word"] = print_word(w);
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

LinComb lincomb_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("expected an object with a \"terms\" array", 0);
  }
  LinComb out;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("word") || !term.contains("coeff") ||
        !term["word"].is_string() || !term["coeff"].is_string()) {
      throw ParseError("each term needs string fields \"word\" and \"coeff\"", 0);
    }
    const std::string word = term["word"].get<std::string>();
    const std::string coeff = term["coeff"].get<std::string>();
    const std::size_t digits = (!coeff.empty() && coeff[0] == '-') ? 1 : 0;
    if (coeff.size() == digits ||
        coeff.find_first_not_of("0123456789", digits) != std::string::npos) {
      throw ParseError("coefficient '" + coeff + "' is not a decimal integer", 0);
    }
    out.add_term(word == "1" ? Word() : parse_word(word), Integer(coeff));
  }
  return out;
}

}  // namespace zetashuffle
