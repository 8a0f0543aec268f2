// Command-line front end: expression normalization, expansion formulas,
// relation-element printing and substitution, exact evaluation on matrix
// tuples, randomized relation sweeps, and the generating-system analyzer.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <oinv/analysis.hpp>
#include <oinv/eval.hpp>
#include <oinv/expansion.hpp>
#include <oinv/expr.hpp>
#include <oinv/io.hpp>
#include <oinv/quiver.hpp>

namespace {

oinv::FieldDesc parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return oinv::FieldDesc::rationals();
  if (text.rfind("fp:", 0) == 0 || text.rfind("Fp:", 0) == 0) {
    unsigned long long p = 0;
    std::size_t used = 0;
    std::string digits = text.substr(3);
    p = std::stoull(digits, &used);
    if (used != digits.size())
      throw std::invalid_argument("field: expected q or fp:P, got \"" + text + "\"");
    return oinv::FieldDesc::prime(p);
  }
  throw std::invalid_argument("field: expected q or fp:P, got \"" + text + "\"");
}

nlohmann::json tuple_json_from_file(const std::string& path) {
  nlohmann::json j;
  if (path == "-") {
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  in >> j;
  return j;
}

int run_normalize(const std::string& expr_text, const std::string& field_text,
                  bool as_json) {
  oinv::FieldDesc field = parse_field(field_text);
  oinv::SigmaExpr expr = oinv::parse_expr(expr_text, field);
  oinv::SigmaPoly poly = oinv::normalize(expr);
  if (as_json) {
    nlohmann::json j;
    j["input"] = expr_text;
    j["field"] = field.to_string();
    j["normal_form"] = oinv::format_poly(poly);
    j["term_count"] = poly.terms().size();
    j["degree"] = poly.degree();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << oinv::format_poly(poly) << "\n";
  }
  return 0;
}

int run_eval(const std::string& expr_text, const std::string& matrices_path,
             bool direct, bool as_json) {
  oinv::MatrixTuple tuple = oinv::tuple_from_json(tuple_json_from_file(matrices_path));
  oinv::SigmaExpr expr = oinv::parse_expr(expr_text, tuple.field);
  oinv::FieldElement value = direct
                                 ? oinv::eval_expr_direct(expr, tuple)
                                 : oinv::eval_poly(oinv::normalize(expr), tuple);
  if (as_json) {
    nlohmann::json j;
    j["input"] = expr_text;
    j["field"] = tuple.field.to_string();
    j["n"] = tuple.n;
    j["d"] = tuple.count();
    j["direct"] = direct;
    j["value"] = value.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
  return 0;
}

int run_sigmatr(int t, int r, const std::string& a_text, const std::string& b_text,
                const std::string& c_text, const std::string& field_text) {
  const oinv::SigmaPoly& poly = oinv::sigma_tr(t, r);
  bool subst = !a_text.empty() || !b_text.empty() || !c_text.empty();
  if (!subst) {
    std::cout << oinv::format_poly(poly, oinv::SymbolStyle::Quiver) << "\n";
    return 0;
  }
  if (a_text.empty() || b_text.empty() || c_text.empty())
    throw std::invalid_argument("sigmatr: substitution needs all of --a, --b, --c");
  oinv::FieldDesc field = parse_field(field_text);
  oinv::WordSum a = oinv::parse_word_sum(a_text, field);
  oinv::WordSum b = oinv::parse_word_sum(b_text, field);
  oinv::WordSum c = oinv::parse_word_sum(c_text, field);
  std::cout << oinv::format_poly(oinv::substitute(poly, a, b, c)) << "\n";
  return 0;
}

int run_verify(int n, int max_excess, int word_len, int d, int samples,
               std::uint64_t seed, long bound, bool as_json) {
  oinv::SweepResult res = oinv::relation_sweep(n, max_excess, word_len, d, samples,
                                               seed, bound);
  if (as_json) {
    nlohmann::json j;
    j["n"] = res.n;
    j["seed"] = res.seed;
    j["samples"] = res.samples;
    j["all_required_vanished"] = res.all_required_vanished;
    j["required_case_count"] = res.required_case_count;
    j["witness_count"] = res.witness_count;
    j["pairs"] = nlohmann::json::array();
    for (const oinv::SweepPairSummary& p : res.pairs) {
      j["pairs"].push_back({{"t", p.t},
                            {"r", p.r},
                            {"required", p.required},
                            {"cases", p.cases},
                            {"violations", p.violations},
                            {"witnesses", p.witnesses}});
    }
    j["flagged"] = nlohmann::json::array();
    for (const oinv::SweepCase& c : res.flagged) {
      nlohmann::json jc{{"t", c.t},
                        {"r", c.r},
                        {"required", c.required},
                        {"a", oinv::format_word_sum(c.a)},
                        {"b", oinv::format_word_sum(c.b)},
                        {"c", oinv::format_word_sum(c.c)}};
      if (c.report.witness) {
        jc["witness_seed"] = c.report.witness->first;
        jc["witness_value"] = c.report.witness->second;
      }
      j["flagged"].push_back(jc);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "relation sweep: n=" << res.n << " d=" << d << " word-len " << word_len
              << " max-excess " << max_excess << " samples " << res.samples << " seed "
              << res.seed << "\n";
    for (const oinv::SweepPairSummary& p : res.pairs) {
      std::cout << "  (t=" << p.t << ", r=" << p.r << ") "
                << (p.required ? "required" : "boundary") << ": " << p.cases
                << " cases, ";
      if (p.required)
        std::cout << p.violations << " violations\n";
      else
        std::cout << p.witnesses << " nonzero witnesses\n";
    }
    std::cout << "required cases: " << res.required_case_count << "; all vanished: "
              << (res.all_required_vanished ? "yes" : "NO") << "\n";
    if (!res.all_required_vanished) {
      for (const oinv::SweepCase& c : res.flagged) {
        if (!c.required || !c.report.witness) continue;
        std::cout << "  VIOLATION at (t=" << c.t << ", r=" << c.r
                  << ") a=" << oinv::format_word_sum(c.a)
                  << " b=" << oinv::format_word_sum(c.b)
                  << " c=" << oinv::format_word_sum(c.c) << " tuple seed "
                  << c.report.witness->first << " value " << c.report.witness->second
                  << "\n";
      }
    }
  }
  return res.all_required_vanished ? 0 : 1;
}

int run_analyze(int n, int d, int max_deg, long samples, const std::string& field_text,
                std::uint64_t seed, bool exact, long bound,
                const std::string& json_path) {
  oinv::FieldDesc field = parse_field(field_text);
  oinv::AnalyzeOptions options;
  options.exact = exact;
  options.bound = bound;
  oinv::DegreeLedger led = oinv::analyze(n, d, max_deg, samples, field, seed, options);
  std::cout << oinv::render_ledger(led);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write JSON file: " + json_path);
    out << oinv::ledger_json(led).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generators and relations of orthogonal matrix invariants"};
  app.require_subcommand(1);

  // normalize
  auto* cmd_norm = app.add_subcommand("normalize", "normal form of an expression");
  std::string norm_expr, norm_field = "q";
  bool norm_json = false;
  cmd_norm->add_option("--expr", norm_expr, "expression, e.g. \"s2(x1 + 2*x2 x1')\"")
      ->required();
  cmd_norm->add_option("--field", norm_field, "q or fp:P (default q)");
  cmd_norm->add_flag("--json", norm_json, "JSON output");

  // amitsur
  auto* cmd_amitsur = app.add_subcommand("amitsur", "expansion of s_t(A1 + ... + Ap)");
  int am_t = 0, am_p = 0;
  cmd_amitsur->add_option("--t", am_t, "subscript t >= 0")->required();
  cmd_amitsur->add_option("--p", am_p, "number of summands >= 1")->required();

  // power
  auto* cmd_power = app.add_subcommand("power", "expansion of s_t(A^l)");
  int pw_t = 0, pw_l = 0;
  cmd_power->add_option("--t", pw_t, "subscript t >= 1")->required();
  cmd_power->add_option("--l", pw_l, "power l >= 1")->required();

  // newton
  auto* cmd_newton = app.add_subcommand("newton", "s_t as a polynomial in trace powers");
  int nw_t = 0;
  std::string nw_field = "q";
  cmd_newton->add_option("--t", nw_t, "subscript t >= 1")->required();
  cmd_newton->add_option("--field", nw_field, "q or fp:P with P > t (default q)");

  // sigmatr
  auto* cmd_sigmatr = app.add_subcommand("sigmatr", "relation element sigma_{t,r}");
  int st_t = 0, st_r = 0;
  std::string st_a, st_b, st_c, st_field = "q";
  cmd_sigmatr->add_option("--t", st_t, "t >= 0")->required();
  cmd_sigmatr->add_option("--r", st_r, "r >= 0")->required();
  cmd_sigmatr->add_option("--a", st_a, "word sum substituted for x");
  cmd_sigmatr->add_option("--b", st_b, "word sum substituted for y");
  cmd_sigmatr->add_option("--c", st_c, "word sum substituted for z");
  cmd_sigmatr->add_option("--field", st_field, "q or fp:P (default q)");

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression on a matrix tuple");
  std::string ev_expr, ev_file;
  bool ev_direct = false, ev_json = false;
  cmd_eval->add_option("--expr", ev_expr, "expression to evaluate")->required();
  cmd_eval->add_option("--matrices", ev_file, "JSON tuple file, or - for stdin")
      ->required();
  cmd_eval->add_flag("--direct", ev_direct, "evaluate the tree without normalizing");
  cmd_eval->add_flag("--json", ev_json, "JSON output");

  // verify-relations
  auto* cmd_verify = app.add_subcommand(
      "verify-relations", "check that relation elements vanish on random tuples");
  int vr_n = 0, vr_excess = 2, vr_wordlen = 2, vr_d = 2, vr_samples = 20;
  std::uint64_t vr_seed = 0;
  long vr_bound = 10;
  bool vr_json = false;
  cmd_verify->add_option("--n", vr_n, "matrix size")->required();
  cmd_verify->add_option("--max-excess", vr_excess, "check n < t+2r <= n+excess (default 2)");
  cmd_verify->add_option("--word-len", vr_wordlen, "substitution word length cap (default 2)");
  cmd_verify->add_option("--d", vr_d, "number of symbols (default 2)");
  cmd_verify->add_option("--samples", vr_samples, "tuples per case (default 20)");
  cmd_verify->add_option("--seed", vr_seed, "random seed")->required();
  cmd_verify->add_option("--bound", vr_bound, "entry bound (default 10)");
  cmd_verify->add_flag("--json", vr_json, "JSON output");

  // analyze-generators
  auto* cmd_analyze = app.add_subcommand(
      "analyze-generators", "minimal-generator counts per degree");
  int an_n = 0, an_d = 0, an_maxdeg = 0;
  long an_samples = 0, an_bound = 10;
  std::uint64_t an_seed = 0;
  std::string an_field = "q", an_json;
  bool an_exact = false;
  cmd_analyze->add_option("--n", an_n, "matrix size")->required();
  cmd_analyze->add_option("--d", an_d, "number of symbols")->required();
  cmd_analyze->add_option("--max-deg", an_maxdeg, "degree search bound")->required();
  cmd_analyze->add_option("--field", an_field, "q or fp:P (default q)");
  cmd_analyze->add_option("--samples", an_samples, "evaluation columns (0 = auto)");
  cmd_analyze->add_option("--seed", an_seed, "random seed")->required();
  cmd_analyze->add_flag("--exact", an_exact,
                        "exact integer evaluation with fraction-free cross-checks");
  cmd_analyze->add_option("--bound", an_bound, "entry bound for --exact (default 10)");
  cmd_analyze->add_option("--json", an_json, "also write the ledger as JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_norm) return run_normalize(norm_expr, norm_field, norm_json);
    if (*cmd_amitsur) {
      std::cout << oinv::format_amitsur(oinv::amitsur_expand(am_t, am_p)) << "\n";
      return 0;
    }
    if (*cmd_power) {
      std::cout << oinv::format_power(oinv::power_expand(pw_t, pw_l)) << "\n";
      return 0;
    }
    if (*cmd_newton) {
      std::cout << oinv::format_newton(
                       oinv::newton_traces(nw_t, parse_field(nw_field)))
                << "\n";
      return 0;
    }
    if (*cmd_sigmatr) return run_sigmatr(st_t, st_r, st_a, st_b, st_c, st_field);
    if (*cmd_eval) return run_eval(ev_expr, ev_file, ev_direct, ev_json);
    if (*cmd_verify)
      return run_verify(vr_n, vr_excess, vr_wordlen, vr_d, vr_samples, vr_seed,
                        vr_bound, vr_json);
    if (*cmd_analyze)
      return run_analyze(an_n, an_d, an_maxdeg, an_samples, an_field, an_seed,
                         an_exact, an_bound, an_json);
  } catch (const oinv::SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
