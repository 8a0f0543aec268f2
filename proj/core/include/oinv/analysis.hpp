#pragma once

// Desk-scale search for a minimal homogeneous generating system: per degree
// D, compare the span of products of lower-degree invariants against the
// span of products plus the degree-D candidates s_t(class), counting how
// many candidates are independent of the products.  Ranks are measured on
// evaluation columns (one column per random matrix tuple), exactly:
//  * over the rationals, via two independent runs modulo distinct random
//    ~60-bit primes with points uniform in each prime field, which must
//    agree bit for bit;
//  * over a small prime field F_p, via two runs with points drawn from an
//    extension field F_{p^k} large enough for rank estimates to be sound
//    (points inside F_p itself would identify distinct invariants, e.g.
//    s_1^p and s_1 of the p-th power word agree on every F_p point);
//  * optionally (options.exact) over exact integers with fraction-free
//    rank checks, for small configurations and cross-validation.

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "oinv/field.hpp"
#include "oinv/sigma.hpp"

namespace oinv {

// All candidate invariants s_t(class) of degree <= max_deg: t <= n (higher
// indices vanish on n x n matrices), class primitive over d symbols,
// degree t * |class|.  Sorted by (degree, t, class).
std::vector<SigmaGen> candidate_generators(int n, int d, int max_deg);

struct DegreeRow {
  int degree = 0;
  long candidate_count = 0;
  long decomposable_rank = 0;   // rank of the products of lower degrees
  long total_rank = 0;          // rank of products and candidates together
  long new_generator_count = 0; // total_rank - decomposable_rank

  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct DegreeLedger {
  int n = 0, d = 0;
  int search_bound = 0;  // the max degree examined
  FieldDesc field = FieldDesc::rationals();
  std::uint64_t seed = 0;
  long samples_requested = 0;
  long samples_used = 0;
  std::vector<DegreeRow> rows;
  std::vector<SigmaGen> generators;  // minimal generators, in degree order
  int max_indecomposable_degree = 0;  // 0 when no generator was found
  std::vector<std::string> notes;
};

struct AnalyzeOptions {
  bool exact = false;  // exact integer evaluation + fraction-free checks
  long bound = 10;     // entry bound for the exact path
};

// samples <= 0 picks a default; in every mode the column count is doubled
// (with a note) whenever a measured rank reaches it, since a full-rank
// result only bounds the true dimension from below.
DegreeLedger analyze(int n, int d, int max_deg, long samples,
                     const FieldDesc& field, std::uint64_t seed,
                     const AnalyzeOptions& options = {});

// Expected range for the largest generator degree when n == 3: [6, 6] in
// characteristic 0 or >= 5, [2d+4, 2d+7] in characteristic 3.
struct DegreeWindow {
  int low = 0, high = 0;
  bool applicable = false;
};
DegreeWindow expected_window(int n, int d, const FieldDesc& field);

std::string render_ledger(const DegreeLedger& ledger);
nlohmann::json ledger_json(const DegreeLedger& ledger);

// Rank of an integer matrix by fraction-free (division-exact) elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m);

}  // namespace oinv
