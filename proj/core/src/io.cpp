#include "oinv/io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>

namespace oinv {

namespace {

struct Parser {
  std::string_view s;
  FieldDesc field;
  std::size_t i = 0;

  explicit Parser(std::string_view text, const FieldDesc& f)
      : s(text), field(f) {}

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, i);
  }

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool at_end() {
    skip_ws();
    return i == s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  mpz_class parse_uint() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    return mpz_class(std::string(s.substr(start, i - start)), 10);
  }

  int parse_small_uint(const char* what) {
    mpz_class v = parse_uint();
    if (!v.fits_sint_p()) fail(std::string(what) + " out of range");
    return static_cast<int>(v.get_si());
  }

  // digits ['/' digits], no sign.
  FieldElement parse_coeff_magnitude() {
    mpz_class num = parse_uint();
    mpq_class q(num);
    if (eat('/')) {
      mpz_class den = parse_uint();
      if (den == 0) fail("zero denominator");
      q = mpq_class(num) / mpq_class(den);
    }
    return FieldElement::from_mpq(field, q);
  }

  bool at_letter() {
    char c = peek();
    return c == 'x' || c == 'y' || c == 'z' || c == 'A';
  }

  Letter parse_letter() {
    skip_ws();
    char c = s[i++];
    int index;
    bool indexed = (c == 'x' || c == 'A');
    if (indexed) {
      index = 1;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
        mpz_class v(std::string(s.substr(start, i - start)), 10);
        if (!v.fits_sint_p() || v < 1) fail("letter index out of range");
        index = static_cast<int>(v.get_si());
      }
    } else {
      index = (c == 'y') ? 2 : 3;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        fail("'y' and 'z' take no index");
    }
    bool transposed = (i < s.size() && s[i] == '\'');
    if (transposed) ++i;
    return Letter{index, transposed};
  }

  Word parse_word() {
    if (!at_letter()) fail("expected a letter");
    std::vector<Letter> letters;
    letters.push_back(parse_letter());
    while (at_letter()) letters.push_back(parse_letter());
    return Word(std::move(letters));
  }

  // Inside s_t( ... ): signed combination of words.
  WordSum parse_word_sum() {
    WordSum out(field);
    bool negative = eat('-');
    if (!negative) eat('+');
    for (;;) {
      FieldElement coeff = FieldElement::one(field);
      if (at_digit()) {
        coeff = parse_coeff_magnitude();
        expect('*', "'*' between coefficient and word");
      }
      if (negative) coeff = -coeff;
      out.add(parse_word(), coeff);
      if (eat('-'))
        negative = true;
      else if (eat('+'))
        negative = false;
      else
        break;
    }
    return out;
  }

  SigmaExpr parse_gen() {
    skip_ws();
    if (peek() != 's') fail("expected 's'");
    ++i;
    int t = parse_small_uint("sigma index");
    if (t < 1) fail("sigma index must be >= 1");
    expect('(', "'('");
    WordSum arg = parse_word_sum();
    expect(')', "')'");
    return SigmaExpr::sigma(t, std::move(arg));
  }

  // factor := gen ['^' INT]; returns the factor repeated into `out`.
  void parse_factor(std::vector<SigmaExpr>& out) {
    SigmaExpr gen = parse_gen();
    int exponent = 1;
    if (eat('^')) {
      exponent = parse_small_uint("exponent");
      if (exponent < 1) fail("exponent must be >= 1");
      if (exponent > 64) fail("exponent too large");
    }
    for (int k = 0; k < exponent; ++k) out.push_back(gen);
  }

  SigmaExpr parse_term(bool negative) {
    std::vector<SigmaExpr> factors;
    FieldElement coeff = FieldElement::one(field);
    bool have_coeff = false;
    if (at_digit()) {
      coeff = parse_coeff_magnitude();
      have_coeff = true;
    }
    if (negative) coeff = -coeff;
    if (have_coeff) {
      if (eat('*'))
        parse_factor(factors);
      else
        return SigmaExpr::constant(coeff);  // bare constant term
    } else {
      parse_factor(factors);
    }
    while (eat('*')) parse_factor(factors);
    std::vector<SigmaExpr> children;
    children.push_back(SigmaExpr::constant(coeff));
    for (SigmaExpr& f : factors) children.push_back(std::move(f));
    return SigmaExpr::product(std::move(children));
  }

  SigmaExpr parse_expr() {
    std::vector<SigmaExpr> terms;
    bool negative = eat('-');
    if (!negative) eat('+');
    terms.push_back(parse_term(negative));
    for (;;) {
      if (eat('-'))
        negative = true;
      else if (eat('+'))
        negative = false;
      else
        break;
      terms.push_back(parse_term(negative));
    }
    if (!at_end()) fail("unexpected trailing input");
    return SigmaExpr::sum(std::move(terms));
  }
};

}  // namespace

Word parse_word(std::string_view text) {
  Parser p(text, FieldDesc::rationals());
  Word w = p.parse_word();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return w;
}

WordSum parse_word_sum(std::string_view text, const FieldDesc& field) {
  Parser p(text, field);
  WordSum ws = p.parse_word_sum();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return ws;
}

SigmaExpr parse_expr(std::string_view text, const FieldDesc& field) {
  Parser p(text, field);
  return p.parse_expr();
}

// ---- formatting -----------------------------------------------------------

std::string format_letter(const Letter& a, SymbolStyle style) {
  std::string out;
  switch (style) {
    case SymbolStyle::Indexed:
      out = "x" + std::to_string(a.index);
      break;
    case SymbolStyle::Quiver:
      if (a.index == kQuiverX)
        out = "x";
      else if (a.index == kQuiverY)
        out = "y";
      else if (a.index == kQuiverZ)
        out = "z";
      else
        out = "x" + std::to_string(a.index);
      break;
    case SymbolStyle::Abstract:
      out = "A" + std::to_string(a.index);
      break;
  }
  if (a.transposed) out += "'";
  return out;
}

std::string format_word(const Word& w, SymbolStyle style) {
  std::string out;
  for (const Letter& a : w.letters()) {
    if (!out.empty()) out += " ";
    out += format_letter(a, style);
  }
  return out;
}

std::string format_word_sum(const WordSum& ws, SymbolStyle style) {
  if (ws.is_zero()) return "0";
  bool rational = ws.field().is_rational();
  std::string out;
  for (const auto& [w, c] : ws.terms()) {
    bool negative = rational && c.rational_value() < 0;
    std::string mag =
        negative ? (-c).to_string() : c.to_string();
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (mag != "1") out += mag + "*";
    out += format_word(w, style);
  }
  return out;
}

std::string format_gen(const SigmaGen& g, SymbolStyle style) {
  return "s" + std::to_string(g.t()) + "(" +
         format_word(g.word_class().rep(), style) + ")";
}

namespace {

std::string format_factors_carated(const std::vector<SigmaGen>& factors,
                                   SymbolStyle style) {
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += "*";
    out += format_gen(factors[i], style);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string format_poly(const SigmaPoly& p, SymbolStyle style) {
  if (p.is_zero()) return "0";
  bool rational = p.field().is_rational();
  std::string out;
  for (const auto& [mono, c] : p.terms()) {
    bool negative = rational && c.rational_value() < 0;
    std::string mag = negative ? (-c).to_string() : c.to_string();
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    out += mag;
    if (!mono.is_constant())
      out += "*" + format_factors_carated(mono.factors(), style);
  }
  return out;
}

std::string format_amitsur(const AmitsurExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const AmitsurTerm& term : e.terms) {
    if (term.sign < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += "1";
    for (const AmitsurFactor& f : term.factors) {
      out += "*s" + std::to_string(f.j) + "(";
      bool first = true;
      for (int sym : f.cycle.symbols()) {
        if (!first) out += " ";
        out += "A" + std::to_string(sym);
        first = false;
      }
      out += ")";
    }
  }
  return out;
}

std::string format_power(const PowerExpansion& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const PowerTerm& term : e.terms) {
    bool negative = term.coeff < 0;
    mpz_class mag = negative ? mpz_class(-term.coeff) : term.coeff;
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    out += mag.get_str();
    for (const auto& [idx, exp] : term.powers) {
      out += "*s" + std::to_string(idx) + "(A)";
      if (exp > 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

std::string format_newton(const NewtonExpansion& e) {
  if (e.terms.empty()) return "0";
  bool rational = e.field.is_rational();
  std::string out;
  for (const NewtonTerm& term : e.terms) {
    bool negative = rational && term.coeff.rational_value() < 0;
    std::string mag =
        negative ? (-term.coeff).to_string() : term.coeff.to_string();
    if (!out.empty())
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    out += mag;
    for (const auto& [idx, exp] : term.powers) {
      out += "*s1(A";
      if (idx > 1) out += "^" + std::to_string(idx);
      out += ")";
      if (exp > 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

// ---- matrix tuple JSON -----------------------------------------------------

namespace {

FieldElement entry_from_json(const nlohmann::json& v, const FieldDesc& field) {
  mpq_class q;
  if (v.is_number_integer()) {
    q = mpq_class(static_cast<long>(v.get<long long>()));
  } else if (v.is_string()) {
    std::string text = v.get<std::string>();
    try {
      q = mpq_class(text);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad matrix entry '" + text + "'");
    }
    if (q.get_den() == 0)
      throw std::invalid_argument("bad matrix entry '" + text +
                                  "': zero denominator");
    q.canonicalize();
  } else {
    throw std::invalid_argument(
        "matrix entries must be integers or 'a/b' strings");
  }
  return FieldElement::from_mpq(field, q);
}

}  // namespace

MatrixTuple tuple_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("tuple JSON must be an object");
  for (const char* key : {"n", "d", "field", "matrices"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("tuple JSON needs '") + key +
                                  "'");
  int n = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");

  const nlohmann::json& jf = j.at("field");
  std::string type = jf.at("type").get<std::string>();
  FieldDesc field = FieldDesc::rationals();
  if (type == "Fp")
    field = FieldDesc::prime(jf.at("p").get<std::uint64_t>());
  else if (type != "Q")
    throw std::invalid_argument("field type must be 'Q' or 'Fp'");

  const nlohmann::json& jm = j.at("matrices");
  if (!jm.is_array() || static_cast<int>(jm.size()) != d)
    throw std::invalid_argument("'matrices' must list exactly d matrices");

  MatrixTuple tuple;
  tuple.n = n;
  tuple.field = field;
  for (const nlohmann::json& jmat : jm) {
    if (!jmat.is_array() || static_cast<int>(jmat.size()) != n)
      throw std::invalid_argument("each matrix must have n rows");
    Matrix m(n, field);
    for (int r = 0; r < n; ++r) {
      const nlohmann::json& row = jmat.at(r);
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument("each row must have n entries");
      for (int c = 0; c < n; ++c) m.at(r, c) = entry_from_json(row.at(c), field);
    }
    tuple.matrices.push_back(std::move(m));
  }
  return tuple;
}

nlohmann::json tuple_to_json(const MatrixTuple& tuple) {
  nlohmann::json j;
  j["n"] = tuple.n;
  j["d"] = tuple.count();
  if (tuple.field.is_rational())
    j["field"] = {{"type", "Q"}};
  else
    j["field"] = {{"type", "Fp"}, {"p", tuple.field.characteristic()}};
  nlohmann::json mats = nlohmann::json::array();
  for (const Matrix& m : tuple.matrices) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.size(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < m.size(); ++c) {
        const FieldElement& v = m.at(r, c);
        if (v.field().is_rational()) {
          const mpq_class& q = v.rational_value();
          if (q.get_den() == 1 && q.get_num().fits_slong_p())
            row.push_back(q.get_num().get_si());
          else
            row.push_back(q.get_str());
        } else {
          row.push_back(v.residue_value());
        }
      }
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j["matrices"] = std::move(mats);
  return j;
}

}  // namespace oinv
