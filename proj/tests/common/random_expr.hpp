#pragma once

// Deterministic pseudo-random expression trees used by the normalizer
// agreement tests: bounded depth, words of bounded length over d symbols,
// small nonzero integer coefficients.

#include <oinv/expr.hpp>
#include <oinv/sigma.hpp>
#include <oinv/word.hpp>

#include <random>
#include <vector>

namespace oinv::testgen {

inline Word random_word(std::mt19937_64& rng, int d, int max_len) {
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    int index = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
    bool transposed = (rng() % 2) != 0;
    letters.push_back({index, transposed});
  }
  return Word(std::move(letters));
}

inline FieldElement random_coeff(std::mt19937_64& rng, const FieldDesc& field) {
  long v = static_cast<long>(rng() % 7) - 3;  // -3..3
  if (v == 0) v = 1;
  return FieldElement::integer(field, v);
}

inline WordSum random_word_sum(std::mt19937_64& rng, const FieldDesc& field,
                               int d, int max_len) {
  WordSum ws(field);
  int terms = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < terms; ++i)
    ws.add(random_word(rng, d, max_len), random_coeff(rng, field));
  return ws;
}

// Depth counts Sum/Product nesting; leaves are s_t over a random word sum or
// an integer constant.
inline SigmaExpr random_expr(std::mt19937_64& rng, const FieldDesc& field,
                             int depth, int d, int max_word_len) {
  if (depth == 0 || rng() % 4 == 0) {
    if (rng() % 5 == 0)
      return SigmaExpr::constant(random_coeff(rng, field));
    int t = 1 + static_cast<int>(rng() % 3);
    return SigmaExpr::sigma(t, random_word_sum(rng, field, d, max_word_len));
  }
  std::vector<SigmaExpr> children;
  int count = 2 + static_cast<int>(rng() % 2);
  for (int i = 0; i < count; ++i)
    children.push_back(random_expr(rng, field, depth - 1, d, max_word_len));
  return rng() % 2 ? SigmaExpr::sum(std::move(children))
                   : SigmaExpr::product(std::move(children));
}

}  // namespace oinv::testgen
