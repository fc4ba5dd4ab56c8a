#include "zetashuffle_cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "zetashuffle/closed_form.hpp"
#include "zetashuffle/equivalence.hpp"
#include "zetashuffle/error.hpp"
#include "zetashuffle/mzv.hpp"
#include "zetashuffle/shuffle.hpp"
#include "zetashuffle/verify.hpp"

namespace zetashuffle::cli {

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

struct ShuffleArgs {
  std::string w1, w2;
  std::string method = "auto";
  std::string format = "plain";
  bool words_only = false;
};

int cmd_shuffle(const ShuffleArgs& a, std::ostream& out) {
  const Word u = parse_word(a.w1);
  const Word v = parse_word(a.w2);
  LinComb result;
  const bool general_ok = in_h1(u) && in_h1(v);
  if (a.method == "recursive") {
    result = shuffle_recursive(u, v);
  } else if (a.method == "permutation") {
    result = shuffle_permutation(u, v);
  } else if (a.method == "general" || (a.method == "auto" && general_ok)) {
    if (!general_ok) {
      throw DomainError(ErrorCode::kNotInH1, "method 'general' needs both words nonempty and ending in y");
    }
    result = expand_general(to_exponent_form(u), to_exponent_form(v));
  } else {
    result = shuffle_recursive(u, v);
  }
  out << render(result, parse_format(a.format), !a.words_only) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  int max_weight = 8;
  unsigned threads = 0;
  std::string format = "plain";
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const int cap = weight_cap();
  if (a.max_weight > cap) {
    err << "error: --max-weight " << a.max_weight << " exceeds the cap " << cap
        << " (set MZV_MAX_WEIGHT to raise it)\n";
    return kExitUsage;
  }
  const auto reports = run_suite(parse_suite(a.suite), a.max_weight, a.threads);
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (a.format == "json") {
    out << to_json(reports, a.timing) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.suite << ": " << r.checked << " checked, " << r.failed << " failed (max weight "
          << r.max_weight << ")";
      if (a.timing) out << " in " << fmt("%.1f", r.elapsed_ms) << " ms";
      out << '\n';
      if (r.first_failure) out << "  first failure: " << *r.first_failure << '\n';
    }
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

struct ZetaArgs {
  std::string index;
  long terms = kDefaultTerms;
  std::string format = "plain";
};

int cmd_zeta(const ZetaArgs& a, std::ostream& out) {
  const MzvIndex idx = parse_mzv_index(a.index);
  const NumericResult r = mzv_eval(idx, a.terms);
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["index"] = print_mzv_index(idx);
    doc["value"] = r.value;
    doc["err_est"] = r.err_est;
    doc["terms"] = r.terms_used;
    out << doc.dump() << '\n';
  } else {
    out << "zeta(" << print_mzv_index(idx) << ") = " << fmt("%.12f", r.value) << " +/- "
        << fmt("%.3e", r.err_est) << " (M=" << r.terms_used << ")\n";
  }
  return kExitOk;
}

struct IdentityArgs {
  std::string w1, w2;
  double tol = -1.0;
  long terms = kDefaultTerms;
  std::string format = "plain";
};

int cmd_identity(const IdentityArgs& a, std::ostream& out) {
  const Word u = parse_word(a.w1);
  const Word v = parse_word(a.w2);
  const IdentityCheck c = identity_check(u, v, a.terms);
  const double tol = a.tol >= 0.0 ? a.tol : c.bound();
  const bool pass = c.residual <= tol;
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["w1"] = print_word(u);
    doc["w2"] = print_word(v);
    doc["lhs"] = c.lhs;
    doc["rhs"] = c.rhs;
    doc["residual"] = c.residual;
    doc["err_est"] = c.err_est;
    doc["tolerance"] = tol;
    doc["pass"] = pass;
    out << doc.dump() << '\n';
  } else {
    out << "zeta(" << print_word(u) << ") zeta(" << print_word(v) << ") = " << fmt("%.12f", c.lhs) << '\n'
        << "zeta(" << print_word(u) << " sh " << print_word(v) << ") = " << fmt("%.12f", c.rhs) << '\n'
        << "residual " << fmt("%.3e", c.residual) << " (tolerance " << fmt("%.3e", tol) << ") "
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

struct EquivArgs {
  std::string pair;
  int max_param = 2;
  int max_length = 8;
  std::string format = "plain";
  bool timing = false;
};

int cmd_equiv(const EquivArgs& a, std::ostream& out, std::ostream& err) {
  const int cap = weight_cap();
  if (a.max_length > cap) {
    err << "error: --max-length " << a.max_length << " exceeds the cap " << cap
        << " (set MZV_MAX_WEIGHT to raise it)\n";
    return kExitUsage;
  }
  const EquivalencePair pair = a.pair == "A" ? EquivalencePair::kA : EquivalencePair::kB;
  const EquivalenceReport report = check_equivalence(pair, {a.max_param, a.max_length});
  if (a.format == "json") {
    out << to_json(report, a.timing) << '\n';
  } else {
    const auto failures = report.failures();
    out << "pair " << to_string(pair) << ": " << report.points.size() << " checked, " << failures.size()
        << " failed\n";
    for (const auto& f : failures) {
      out << "  failure:";
      for (int p : f.params) out << ' ' << p;
      out << '\n';
    }
    out << (failures.empty() ? "PASS" : "FAIL") << '\n';
  }
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int weight_cap() {
  if (const char* env = std::getenv("MZV_MAX_WEIGHT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return kDefaultWeightCap;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shuffle products of words over {x, y} and multiple zeta values"};
  app.name(args.empty() ? "zetashuffle" : args.front());
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "latex", "json"};
  const std::vector<std::string> plain_json{"plain", "json"};

  ShuffleArgs sa;
  auto* shuffle = app.add_subcommand("shuffle", "Shuffle product of two words");
  shuffle->add_option("w1", sa.w1, "First word, e.g. x^2y")->required();
  shuffle->add_option("w2", sa.w2, "Second word")->required();
  shuffle->add_option("--method", sa.method, "recursive, permutation, general or auto")
      ->check(CLI::IsMember({"recursive", "permutation", "general", "auto"}));
  shuffle->add_option("--format", sa.format, "plain, latex or json")->check(CLI::IsMember(formats));
  shuffle->add_flag("--words", sa.words_only, "Latex: keep words instead of zeta notation");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exhaustive oracle comparison");
  verify->add_option("suite", va.suite, "general, special, res11, res12, res22, nfold, appendixA, appendixB, algebra or all")
      ->required()
      ->check(CLI::IsMember({"general", "special", "res11", "res12", "res22", "nfold", "appendixA",
                             "appendixB", "algebra", "all"}));
  verify->add_option("--max-weight", va.max_weight, "Largest total word length")->check(CLI::Range(0, 63));
  verify->add_option("--threads", va.threads, "Worker threads, 0 = all cores");
  verify->add_option("--format", va.format, "plain or json")->check(CLI::IsMember(plain_json));
  verify->add_flag("--timing", va.timing, "Report elapsed time");

  ZetaArgs za;
  auto* zeta = app.add_subcommand("zeta", "Numeric multiple zeta value");
  zeta->add_option("index", za.index, "Comma separated index, e.g. 3,1")->required();
  zeta->add_option("--terms", za.terms, "Truncation M");
  zeta->add_option("--format", za.format, "plain or json")->check(CLI::IsMember(plain_json));

  IdentityArgs ia;
  auto* identity = app.add_subcommand("identity", "Check zeta(u) zeta(v) = zeta(u sh v) numerically");
  identity->add_option("w1", ia.w1, "First admissible word")->required();
  identity->add_option("w2", ia.w2, "Second admissible word")->required();
  identity->add_option("--tol", ia.tol, "Residual tolerance (default: adaptive)")->check(CLI::NonNegativeNumber);
  identity->add_option("--terms", ia.terms, "Truncation M");
  identity->add_option("--format", ia.format, "plain or json")->check(CLI::IsMember(plain_json));

  EquivArgs ea;
  auto* equiv = app.add_subcommand("equiv", "Compare the older restricted forms with the current ones");
  equiv->add_option("pair", ea.pair, "A (1-1 products) or B (1-2 products)")
      ->required()
      ->check(CLI::IsMember({"A", "B"}));
  equiv->add_option("--max-param", ea.max_param, "Each parameter ranges over 1..N")->check(CLI::Range(0, 63));
  equiv->add_option("--max-length", ea.max_length, "Largest total word length")->check(CLI::Range(0, 63));
  equiv->add_option("--format", ea.format, "plain or json")->check(CLI::IsMember(plain_json));
  equiv->add_flag("--timing", ea.timing, "Include elapsed_ms");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*shuffle) return cmd_shuffle(sa, out);
    if (*verify) return cmd_verify(va, out, err);
    if (*zeta) return cmd_zeta(za, out);
    if (*identity) return cmd_identity(ia, out);
    if (*equiv) return cmd_equiv(ea, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace zetashuffle::cli
