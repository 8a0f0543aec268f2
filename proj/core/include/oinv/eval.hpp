#pragma once

// Exact numeric evaluation: words and sigma polynomials evaluated on
// concrete matrix tuples, with s_t taken from the characteristic
// polynomial (and s_t = 0 for t beyond the matrix size), plus randomized
// verification that relation elements vanish on all tuples.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oinv/expr.hpp"
#include "oinv/matrix.hpp"
#include "oinv/quiver.hpp"
#include "oinv/sigma.hpp"

namespace oinv {

struct MatrixTuple {
  int n = 0;
  FieldDesc field = FieldDesc::rationals();
  std::vector<Matrix> matrices;

  int count() const { return static_cast<int>(matrices.size()); }
};

// d matrices of size n with entries drawn uniformly from the integers in
// [-bound, bound] (mapped into the field).  Deterministic in the seed.
MatrixTuple random_tuple(int n, int d, const FieldDesc& field,
                         std::uint64_t seed, long bound = 10);

// Evaluates words and sigma polynomials on one tuple, caching word products
// and characteristic coefficients.  Letter index k reads matrices[k-1];
// transposed letters read the transpose.
class TupleEvaluator {
 public:
  explicit TupleEvaluator(MatrixTuple tuple);

  const MatrixTuple& tuple() const { return tuple_; }
  const Matrix& word_matrix(const Word& w);
  Matrix word_sum_matrix(const WordSum& ws);
  FieldElement generator_value(const SigmaGen& g);
  FieldElement eval(const SigmaPoly& p);
  // Evaluates the expression tree as written, with no normalization:
  // s_t applied directly to the matrix value of its argument.
  FieldElement eval_direct(const SigmaExpr& e);

 private:
  MatrixTuple tuple_;
  std::map<Word, Matrix> words_;
  std::map<Word, std::vector<FieldElement>> sigmas_;
};

FieldElement eval_poly(const SigmaPoly& p, const MatrixTuple& tuple);
FieldElement eval_expr_direct(const SigmaExpr& e, const MatrixTuple& tuple);

struct EvalReport {
  int samples = 0;
  int zero_count = 0;
  // Seed of the first tuple with a nonzero value, and that value.
  std::optional<std::pair<std::uint64_t, std::string>> witness;
  std::chrono::duration<double> elapsed{};

  bool all_zero() const { return zero_count == samples; }
};

// Evaluates the substituted relation element sigma_{t,r}(a, b, c) on
// `samples` random tuples of size n (tuple i uses seed + i) and reports
// how many vanished.
EvalReport verify_relation(int t, int r, const WordSum& a, const WordSum& b,
                           const WordSum& c, int n, int samples,
                           std::uint64_t seed, long bound = 10);

struct SweepCase {
  int t;
  int r;
  WordSum a, b, c;
  bool required;  // t + 2r > n: the value must vanish on every tuple
  EvalReport report;
};

struct SweepPairSummary {
  int t = 0;
  int r = 0;
  bool required = false;
  long cases = 0;
  long violations = 0;  // required cases with a nonzero sample
  long witnesses = 0;   // non-required cases with a nonzero sample
};

struct SweepResult {
  int n = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<SweepPairSummary> pairs;
  // Every violation, plus the first witness per non-required pair (capped).
  std::vector<SweepCase> flagged;
  bool all_required_vanished = true;
  long required_case_count = 0;
  long witness_count = 0;
};

// For every pair (t, r) with n < t + 2r <= n + max_excess and every choice
// of substitution words of length <= word_len over d symbols (plus one
// two-term sum for a), checks that sigma_{t,r}(a, b, c) vanishes on all
// sample tuples.  Shares tuples across cases: every case sees exactly the
// tuples seeded seed, seed+1, ..., like a direct verify_relation call.
SweepResult relation_sweep(int n, int max_excess, int word_len, int d,
                           int samples, std::uint64_t seed, long bound = 10);

}  // namespace oinv
