#pragma once

// Closed-form expansions used by the normalizer:
//   * amitsur_expand: s_t applied to a sum of p symbols as a signed sum of
//     products of s_j over cyclic words in the symbols,
//   * power_expand: s_t of an l-th power as a polynomial in s_1..s_{t*l} of
//     the base (integer coefficients, valid over any field),
//   * newton_traces: s_t as a polynomial in traces of powers s_1(A^i),
//     valid over the rationals and over F_p with p > t.

#include <cstdint>
#include <utility>
#include <vector>

#include "oinv/field.hpp"

namespace oinv {

// A cyclic word in the abstract symbols 1..p, stored as the least rotation.
class SymbolCycle {
 public:
  explicit SymbolCycle(std::vector<int> symbols);

  const std::vector<int>& symbols() const { return symbols_; }
  std::size_t length() const { return symbols_.size(); }

  std::strong_ordering operator<=>(const SymbolCycle& o) const;
  bool operator==(const SymbolCycle& o) const {
    return symbols_ == o.symbols_;
  }

 private:
  std::vector<int> symbols_;
};

struct AmitsurFactor {
  int j;  // the s_j applied to this cycle
  SymbolCycle cycle;
};

struct AmitsurTerm {
  int sign;  // +1 or -1
  std::vector<AmitsurFactor> factors;
};

struct AmitsurExpansion {
  int t = 0;
  int p = 0;
  std::vector<AmitsurTerm> terms;
};

// Expansion of s_t(A_1 + ... + A_p); deterministic term order.
// Requires t >= 1, p >= 1.
AmitsurExpansion amitsur_expand(int t, int p);

struct PowerTerm {
  mpz_class coeff;
  // Sorted (i, e) pairs meaning s_i(A)^e with e >= 1.
  std::vector<std::pair<int, int>> powers;
};

struct PowerExpansion {
  int t = 0;
  int l = 0;
  std::vector<PowerTerm> terms;
};

// Expansion of s_t(A^l) as an integer polynomial in s_1(A)..s_{t*l}(A).
// Results are cached; the returned reference stays valid for the process
// lifetime.  Requires t >= 1, l >= 1.
const PowerExpansion& power_expand(int t, int l);

struct NewtonTerm {
  FieldElement coeff;
  // Sorted (i, e) pairs meaning s_1(A^i)^e with e >= 1.
  std::vector<std::pair<int, int>> powers;
};

struct NewtonExpansion {
  int t = 0;
  FieldDesc field = FieldDesc::rationals();
  std::vector<NewtonTerm> terms;
};

// s_t(A) as a polynomial in the power traces s_1(A^i), i <= t.  Throws
// std::domain_error over F_p with p <= t (the coefficients have
// denominators divisible by p).
NewtonExpansion newton_traces(int t, const FieldDesc& field);

}  // namespace oinv
