#pragma once

// Text and JSON front door: parsing of expressions, word sums, and words,
// deterministic canonical formatting, and the matrix-tuple JSON layout.
//
// Grammar (whitespace is free except that letters inside a word are
// separated by spaces; juxtaposed letters also parse):
//   expr    := term (('+'|'-') term)*
//   term    := coeff | [coeff '*'] factor ('*' factor)*
//   factor  := gen ['^' INT]
//   gen     := 's' INT '(' wordsum ')'
//   wordsum := ['-'] wterm (('+'|'-') wterm)*
//   wterm   := [coeff '*'] word
//   word    := letter (' ' letter)*
//   coeff   := INT ['/' INT]
//   letter  := ('x'|'A') [INT] ['\''] | ('y'|'z') ['\'']
// 'x' and 'A' default to index 1; 'y' and 'z' are indices 2 and 3.

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include "oinv/eval.hpp"
#include "oinv/expansion.hpp"
#include "oinv/expr.hpp"
#include "oinv/sigma.hpp"
#include "oinv/word.hpp"

namespace oinv {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Word parse_word(std::string_view text);
WordSum parse_word_sum(std::string_view text, const FieldDesc& field);
SigmaExpr parse_expr(std::string_view text, const FieldDesc& field);

enum class SymbolStyle {
  Indexed,  // x1, x2', ...
  Quiver,   // x, y, z and primes for indices 1, 2, 3
  Abstract  // A1, A2, ...
};

std::string format_letter(const Letter& a, SymbolStyle style);
std::string format_word(const Word& w,
                        SymbolStyle style = SymbolStyle::Indexed);
std::string format_word_sum(const WordSum& ws,
                            SymbolStyle style = SymbolStyle::Indexed);
std::string format_gen(const SigmaGen& g,
                       SymbolStyle style = SymbolStyle::Indexed);
// Canonical form: terms in increasing monomial order; explicit coefficient
// magnitudes; '^' collapses repeated factors; "0" for the zero polynomial.
std::string format_poly(const SigmaPoly& p,
                        SymbolStyle style = SymbolStyle::Indexed);

std::string format_amitsur(const AmitsurExpansion& e);
std::string format_power(const PowerExpansion& e);
std::string format_newton(const NewtonExpansion& e);

// Matrix tuple JSON:
//   {"n": 2, "d": 1, "field": {"type": "Q"} | {"type": "Fp", "p": 7},
//    "matrices": [[[1, "1/2"], [0, 3]], ...]}
// Entries are integers or "a/b" strings (decimal strings also accepted).
MatrixTuple tuple_from_json(const nlohmann::json& j);
nlohmann::json tuple_to_json(const MatrixTuple& tuple);

}  // namespace oinv
