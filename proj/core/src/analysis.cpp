#include "oinv/analysis.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "oinv/io.hpp"

namespace oinv {
namespace {

constexpr long kSampleCap = 1L << 15;
constexpr long kSaturationMargin = 8;

// --- deterministic pseudo-random streams ---------------------------------

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

std::uint64_t mix2(std::uint64_t a, std::uint64_t b) {
  SplitMix s{a};
  std::uint64_t x = s.next();
  SplitMix t{x ^ b};
  return t.next();
}

// Unbiased uniform draw from [0, n).
std::uint64_t uniform_below(SplitMix& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t x = rng.next();
    if (x >= threshold) return x % n;
  }
}

// --- arithmetic backends --------------------------------------------------

// F_p for an odd prime p < 2^62, in Montgomery form.
struct MontField {
  using Elem = std::uint64_t;
  std::uint64_t p, npinv, r2, one_elem;

  explicit MontField(std::uint64_t prime) : p(prime) {
    std::uint64_t inv = p;  // p^{-1} mod 2^64 by Newton lifting
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    npinv = 0 - inv;
    unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
    r2 = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * r % p);
    one_elem = reduce(static_cast<unsigned __int128>(r2));
  }

  std::uint64_t reduce(unsigned __int128 t) const {
    std::uint64_t m = static_cast<std::uint64_t>(t) * npinv;
    unsigned __int128 u = t + static_cast<unsigned __int128>(m) * p;
    std::uint64_t v = static_cast<std::uint64_t>(u >> 64);
    return v >= p ? v - p : v;
  }

  Elem zero() const { return 0; }
  Elem one() const { return one_elem; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a ? p - a : 0; }
  Elem mul(Elem a, Elem b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  Elem inv(Elem a) const {
    Elem r = one_elem, b = a;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  Elem sample(SplitMix& rng) const { return mul(uniform_below(rng, p), r2); }
};

// F_{p^k} for a small odd prime, with Zech-logarithm tables.  Elements are
// encoded as 0 (zero) or log+1 with respect to a primitive element g = x.
struct ZechField {
  using Elem = std::uint32_t;
  std::uint64_t p, q, half;
  int k;
  std::vector<std::uint32_t> exp_tab;   // exp_tab[t] = index of g^t
  std::vector<std::uint32_t> log_tab;   // inverse of exp_tab (index -> t)
  std::vector<std::uint32_t> zech_tab;  // encoded value of 1 + g^t

  ZechField(std::uint64_t prime, int ext) : p(prime), k(ext) {
    q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    half = (q - 1) / 2;
    exp_tab.assign(q - 1, 0);
    log_tab.assign(q, 0);
    zech_tab.assign(q - 1, 0);
    // Deterministic search for a monic degree-k polynomial modulo which x is
    // a primitive element; independent of any user-supplied seed.
    SplitMix rng{mix2(0x5EEDF1E1Du, p * 1000003ULL + static_cast<std::uint64_t>(k))};
    std::vector<std::uint32_t> f(k);
    for (;;) {
      for (auto& c : f) c = static_cast<std::uint32_t>(uniform_below(rng, p));
      if (f[0] == 0) continue;  // x would divide the modulus
      if (build_tables(f)) break;
    }
    for (std::uint64_t t = 0; t + 1 < q; ++t) {
      std::uint64_t e = exp_tab[t];
      std::uint64_t c0 = e % p;
      std::uint64_t e2 = e - c0 + (c0 + 1) % p;
      zech_tab[t] = e2 == 0 ? 0 : log_tab[e2] + 1;
    }
  }

  // Steps through the powers of x modulo x^k + f[k-1] x^{k-1} + ... + f[0];
  // succeeds exactly when the order of x is q-1, i.e. the modulus is
  // irreducible and x is primitive.
  bool build_tables(const std::vector<std::uint32_t>& f) {
    std::vector<std::uint32_t> digs(k, 0);
    digs[0] = 1;
    std::uint64_t idx = 1;
    for (std::uint64_t step = 0; step + 1 < q; ++step) {
      if (idx == 0) return false;
      if (idx == 1 && step > 0) return false;
      exp_tab[step] = static_cast<std::uint32_t>(idx);
      log_tab[idx] = static_cast<std::uint32_t>(step);
      std::uint32_t top = digs[k - 1];
      for (int j = k - 1; j > 0; --j) digs[j] = digs[j - 1];
      digs[0] = 0;
      if (top) {
        for (int j = 0; j < k; ++j) {
          std::uint64_t v = digs[j] + (p - f[j]) % p * static_cast<std::uint64_t>(top);
          digs[j] = static_cast<std::uint32_t>(v % p);
        }
      }
      idx = 0;
      for (int j = k - 1; j >= 0; --j) idx = idx * p + digs[j];
    }
    return idx == 1;
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem mul(Elem a, Elem b) const {
    if (!a || !b) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(a - 1) + (b - 1);
    if (s >= q - 1) s -= q - 1;
    return static_cast<Elem>(s + 1);
  }
  Elem add(Elem a, Elem b) const {
    if (!a) return b;
    if (!b) return a;
    std::uint64_t la = a - 1, lb = b - 1;
    std::uint64_t t = lb >= la ? lb - la : lb + (q - 1) - la;
    std::uint32_t z = zech_tab[t];
    if (!z) return 0;
    std::uint64_t s = la + (z - 1);
    if (s >= q - 1) s -= q - 1;
    return static_cast<Elem>(s + 1);
  }
  Elem neg(Elem a) const {
    if (!a) return 0;
    std::uint64_t s = (a - 1) + half;
    if (s >= q - 1) s -= q - 1;
    return static_cast<Elem>(s + 1);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const {
    std::uint64_t la = a - 1;
    return static_cast<Elem>(la == 0 ? 1 : (q - 1 - la) + 1);
  }
  Elem sample(SplitMix& rng) const {
    return static_cast<Elem>(uniform_below(rng, q));
  }
};

const ZechField& zech_field(std::uint64_t p, int k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<ZechField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_unique<ZechField>(p, k);
  return *slot;
}

// Exact rational arithmetic with small integer sample points.
struct MpqField {
  using Elem = mpq_class;
  long bound;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem sample(SplitMix& rng) const {
    long span = 2 * bound + 1;
    long v = static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(span))) - bound;
    return mpq_class(v);
  }
};

// --- generic dense kernels ------------------------------------------------

template <class F>
void matmul(const F& f, const std::vector<typename F::Elem>& a,
            const std::vector<typename F::Elem>& b,
            std::vector<typename F::Elem>& out, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto acc = f.zero();
      for (int k = 0; k < n; ++k) acc = f.add(acc, f.mul(a[i * n + k], b[k * n + j]));
      out[i * n + j] = acc;
    }
  }
}

template <class F>
void transpose_mat(const std::vector<typename F::Elem>& a,
                   std::vector<typename F::Elem>& out, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = a[j * n + i];
}

// s_1..s_n of an n x n matrix for n <= 3, division-free except for a single
// multiplication by 1/2 (the characteristic is never 2 here).
template <class F>
std::array<typename F::Elem, 4> charpoly_small(const F& f,
                                               const std::vector<typename F::Elem>& a,
                                               int n, const typename F::Elem& inv2) {
  using E = typename F::Elem;
  std::array<E, 4> sig{f.zero(), f.zero(), f.zero(), f.zero()};
  if (n == 1) {
    sig[1] = a[0];
    return sig;
  }
  if (n == 2) {
    sig[1] = f.add(a[0], a[3]);
    sig[2] = f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]));
    return sig;
  }
  E tr = f.add(f.add(a[0], a[4]), a[8]);
  E tr2 = f.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr2 = f.add(tr2, f.mul(a[i * 3 + j], a[j * 3 + i]));
  sig[1] = tr;
  sig[2] = f.mul(inv2, f.sub(f.mul(tr, tr), tr2));
  E m0 = f.sub(f.mul(a[4], a[8]), f.mul(a[5], a[7]));
  E m1 = f.sub(f.mul(a[3], a[8]), f.mul(a[5], a[6]));
  E m2 = f.sub(f.mul(a[3], a[7]), f.mul(a[4], a[6]));
  sig[3] = f.add(f.sub(f.mul(a[0], m0), f.mul(a[1], m1)), f.mul(a[2], m2));
  return sig;
}

// Division-free characteristic coefficients for any n (Berkowitz / Samuelson
// Toeplitz recursion); returns s_t = (-1)^t [lambda^{n-t}] det(lambda I - A).
template <class F>
std::vector<typename F::Elem> charpoly_generic(const F& f,
                                               const std::vector<typename F::Elem>& a,
                                               int n) {
  using E = typename F::Elem;
  std::vector<E> coeff{f.one()};
  for (int m = 0; m < n; ++m) {
    std::vector<E> toep(m + 2, f.zero());
    toep[0] = f.one();
    toep[1] = f.neg(a[m * n + m]);
    if (m > 0) {
      std::vector<E> w(m);
      for (int i = 0; i < m; ++i) w[i] = a[i * n + m];
      for (int j = 2; j <= m + 1; ++j) {
        E s = f.zero();
        for (int i = 0; i < m; ++i) s = f.add(s, f.mul(a[m * n + i], w[i]));
        toep[j] = f.neg(s);
        if (j <= m) {
          std::vector<E> nw(m, f.zero());
          for (int r = 0; r < m; ++r) {
            E acc = f.zero();
            for (int c = 0; c < m; ++c) acc = f.add(acc, f.mul(a[r * n + c], w[c]));
            nw[r] = acc;
          }
          w = std::move(nw);
        }
      }
    }
    std::vector<E> next(m + 2, f.zero());
    for (std::size_t i = 0; i < next.size(); ++i) {
      E acc = f.zero();
      for (std::size_t j = 0; j <= i && j < toep.size(); ++j)
        if (i - j < coeff.size()) acc = f.add(acc, f.mul(toep[j], coeff[i - j]));
      next[i] = acc;
    }
    coeff = std::move(next);
  }
  std::vector<E> sig(n + 1, f.zero());
  for (int t = 1; t <= n; ++t) sig[t] = (t % 2) ? f.neg(coeff[t]) : coeff[t];
  return sig;
}

// Incremental row echelon with normalized pivots; insertion order is the
// elimination order, so results are deterministic.
template <class F>
class Echelon {
 public:
  using Elem = typename F::Elem;

  Echelon(const F& f, std::size_t cols) : f_(f), cols_(cols) {}

  // Reduces v against the stored rows; keeps it when independent.
  bool add(std::vector<Elem> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t pc = pivots_[r];
      Elem c = v[pc];
      if (f_.is_zero(c)) continue;
      const std::vector<Elem>& row = rows_[r];
      for (std::size_t j = pc; j < cols_; ++j) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!f_.is_zero(v[j])) {
        lead = j;
        break;
      }
    }
    if (lead == cols_) return false;
    Elem s = f_.inv(v[lead]);
    for (std::size_t j = lead; j < cols_; ++j) v[j] = f_.mul(s, v[j]);
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::vector<std::vector<Elem>> take_rows() { return std::move(rows_); }

 private:
  const F& f_;
  std::size_t cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

// --- candidate table ------------------------------------------------------

struct Cand {
  int t;
  int ci;
};

struct CandTable {
  std::vector<NecklaceClass> classes;
  std::vector<Word> reps;
  std::vector<std::vector<Cand>> by_degree;  // index 0 unused
};

CandTable build_candidates(int n, int d, int max_deg) {
  CandTable tb;
  tb.classes = enumerate_classes(d, max_deg);
  tb.by_degree.assign(max_deg + 1, {});
  for (std::size_t ci = 0; ci < tb.classes.size(); ++ci) {
    tb.reps.push_back(tb.classes[ci].rep());
    int len = static_cast<int>(tb.classes[ci].length());
    for (int t = 1; t <= n && t * len <= max_deg; ++t)
      tb.by_degree[t * len].push_back({t, static_cast<int>(ci)});
  }
  for (auto& v : tb.by_degree) {
    std::sort(v.begin(), v.end(), [](const Cand& a, const Cand& b) {
      return a.t != b.t ? a.t < b.t : a.ci < b.ci;
    });
  }
  return tb;
}

// --- the rank engine ------------------------------------------------------

struct GenRec {
  int degree;
  int t;
  int ci;
  friend bool operator==(const GenRec&, const GenRec&) = default;
};

struct RunOutcome {
  bool saturated = false;
  int saturated_degree = 0;
  std::vector<DegreeRow> rows;
  std::vector<GenRec> gens;
  std::vector<int> tight_degrees;
};

std::vector<std::vector<mpz_class>> to_integer_rows(
    const std::vector<std::vector<mpq_class>>& rows) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    mpz_class l = 1;
    for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    std::vector<mpz_class> irow;
    irow.reserve(row.size());
    for (const auto& e : row) {
      mpq_class scaled = e * l;
      if (scaled.get_den() != 1)
        throw std::logic_error("row scaling by the common denominator failed");
      irow.push_back(scaled.get_num());
    }
    out.push_back(std::move(irow));
  }
  return out;
}

template <class F>
RunOutcome run_engine(const F& f, int n, int d, int max_deg, long samples,
                      std::uint64_t seed, std::uint64_t salt, const CandTable& tb,
                      bool exact_check) {
  using E = typename F::Elem;
  const std::size_t cols = static_cast<std::size_t>(samples);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const std::size_t nclasses = tb.classes.size();

  std::vector<int> tmax(nclasses);
  std::vector<std::vector<std::vector<E>>> vals(nclasses);
  for (std::size_t ci = 0; ci < nclasses; ++ci) {
    int len = static_cast<int>(tb.classes[ci].length());
    tmax[ci] = std::min(n, max_deg / len);
    vals[ci].assign(tmax[ci], std::vector<E>(cols, f.zero()));
  }

  // Evaluate every candidate on every column.
  const E inv2 = f.inv(f.add(f.one(), f.one()));
  std::vector<std::vector<E>> mats(d), mats_t(d);
  for (int m = 0; m < d; ++m) {
    mats[m].resize(nn);
    mats_t[m].resize(nn);
  }
  std::vector<E> cur(nn), nxt(nn);
  for (std::size_t col = 0; col < cols; ++col) {
    SplitMix rng{mix2(mix2(seed, salt), col)};
    for (int m = 0; m < d; ++m) {
      for (std::size_t i = 0; i < nn; ++i) mats[m][i] = f.sample(rng);
      transpose_mat<F>(mats[m], mats_t[m], n);
    }
    for (std::size_t ci = 0; ci < nclasses; ++ci) {
      const std::vector<Letter>& letters = tb.reps[ci].letters();
      {
        const Letter& a = letters[0];
        cur = a.transposed ? mats_t[a.index - 1] : mats[a.index - 1];
      }
      for (std::size_t li = 1; li < letters.size(); ++li) {
        const Letter& a = letters[li];
        matmul(f, cur, a.transposed ? mats_t[a.index - 1] : mats[a.index - 1], nxt, n);
        std::swap(cur, nxt);
      }
      if (n <= 3) {
        auto sig = charpoly_small(f, cur, n, inv2);
        for (int t = 1; t <= tmax[ci]; ++t) vals[ci][t - 1][col] = sig[t];
      } else {
        auto sig = charpoly_generic(f, cur, n);
        for (int t = 1; t <= tmax[ci]; ++t) vals[ci][t - 1][col] = sig[t];
      }
    }
  }

  RunOutcome out;
  std::vector<GenRec>& gens = out.gens;
  std::vector<std::vector<E>> gen_vals;
  std::vector<std::vector<std::vector<E>>> basis(max_deg + 1);

  for (int deg = 1; deg <= max_deg; ++deg) {
    Echelon<F> ech(f, cols);
    std::vector<std::vector<mpq_class>> exact_rows;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int a = gens[gi].degree;  // always < deg
      const std::vector<E>& gv = gen_vals[gi];
      for (const std::vector<E>& brow : basis[deg - a]) {
        std::vector<E> prod(cols);
        for (std::size_t j = 0; j < cols; ++j) prod[j] = f.mul(gv[j], brow[j]);
        if constexpr (std::is_same_v<E, mpq_class>) {
          if (exact_check) exact_rows.push_back(prod);
        }
        ech.add(std::move(prod));
      }
    }
    long dec = static_cast<long>(ech.rank());
    if constexpr (std::is_same_v<E, mpq_class>) {
      if (exact_check) {
        std::size_t br = bareiss_rank(to_integer_rows(exact_rows));
        if (static_cast<long>(br) != dec)
          throw std::logic_error("fraction-free cross-check failed on the product span");
      }
    }
    for (const Cand& c : tb.by_degree[deg]) {
      const std::vector<E>& vv = vals[c.ci][c.t - 1];
      if constexpr (std::is_same_v<E, mpq_class>) {
        if (exact_check) exact_rows.push_back(vv);
      }
      if (ech.add(vv)) {
        gens.push_back({deg, c.t, c.ci});
        gen_vals.push_back(vv);
      }
    }
    long total = static_cast<long>(ech.rank());
    if constexpr (std::is_same_v<E, mpq_class>) {
      if (exact_check) {
        std::size_t br = bareiss_rank(to_integer_rows(exact_rows));
        if (static_cast<long>(br) != total)
          throw std::logic_error("fraction-free cross-check failed on the full span");
      }
    }
    out.rows.push_back({deg, static_cast<long>(tb.by_degree[deg].size()), dec, total,
                        total - dec});
    if (total >= samples) {
      out.saturated = true;
      out.saturated_degree = deg;
      return out;
    }
    if (samples - total <= kSaturationMargin) out.tight_degrees.push_back(deg);
    if (deg < max_deg) basis[deg] = ech.take_rows();
  }
  return out;
}

bool same_outcome(const RunOutcome& a, const RunOutcome& b) {
  return a.rows == b.rows && a.gens == b.gens;
}

// Two distinct random ~60-bit primes derived from the seed.
std::pair<std::uint64_t, std::uint64_t> ledger_primes(std::uint64_t seed) {
  SplitMix s{mix2(seed, 0x0B5E11EDC0FFEEULL)};
  std::uint64_t out[2];
  int got = 0;
  while (got < 2) {
    std::uint64_t c = ((s.next() >> 4) | (1ULL << 60)) | 1;
    while (!is_prime_u64(c)) c += 2;
    if (got == 1 && c == out[0]) continue;
    out[got++] = c;
  }
  return {out[0], out[1]};
}

}  // namespace

std::vector<SigmaGen> candidate_generators(int n, int d, int max_deg) {
  if (n < 1 || d < 1 || max_deg < 1)
    throw std::invalid_argument("candidate_generators: n, d and the degree bound must be positive");
  CandTable tb = build_candidates(n, d, max_deg);
  std::vector<SigmaGen> out;
  for (int deg = 1; deg <= max_deg; ++deg)
    for (const Cand& c : tb.by_degree[deg]) out.emplace_back(c.t, tb.classes[c.ci]);
  return out;
}

DegreeLedger analyze(int n, int d, int max_deg, long samples, const FieldDesc& field,
                     std::uint64_t seed, const AnalyzeOptions& options) {
  if (n < 1 || d < 1 || max_deg < 1)
    throw std::invalid_argument("analyze: n, d and the degree bound must be positive");
  if (samples < 0)
    throw std::invalid_argument("analyze: sample count must be >= 0 (0 picks the default)");
  if (samples > kSampleCap)
    throw std::invalid_argument("analyze: sample count exceeds the supported cap");

  CandTable tb = build_candidates(n, d, max_deg);

  DegreeLedger led;
  led.n = n;
  led.d = d;
  led.search_bound = max_deg;
  led.field = field;
  led.seed = seed;
  led.samples_requested = samples;

  long s = samples > 0 ? samples : (options.exact ? 48 : 256);
  RunOutcome run;

  auto note_doubling = [&](int at_degree, long old_s) {
    led.notes.push_back("columns doubled to " + std::to_string(old_s * 2) +
                        ": the rank at degree " + std::to_string(at_degree) +
                        " filled all " + std::to_string(old_s) + " columns");
  };
  auto check_budget = [&]() {
    if (s > kSampleCap)
      throw std::runtime_error(
          "analyze: ranks did not stabilize within the sample budget; raise the cap or "
          "lower the degree bound");
  };
  // Runs the engine twice (independent fields or point sets) until neither
  // run saturates, then insists on exact agreement.
  auto dual = [&](const auto& fa, const auto& fb, std::uint64_t salt_a,
                  std::uint64_t salt_b) {
    for (;;) {
      check_budget();
      RunOutcome a = run_engine(fa, n, d, max_deg, s, seed, salt_a, tb, false);
      if (a.saturated) {
        note_doubling(a.saturated_degree, s);
        s *= 2;
        continue;
      }
      RunOutcome b = run_engine(fb, n, d, max_deg, s, seed, salt_b, tb, false);
      if (b.saturated) {
        note_doubling(b.saturated_degree, s);
        s *= 2;
        continue;
      }
      if (!same_outcome(a, b))
        throw std::runtime_error(
            "analyze: independent verification runs disagree; rerun with a different seed");
      return a;
    }
  };

  if (options.exact) {
    if (!field.is_rational())
      throw std::invalid_argument("analyze: exact mode works over the rationals");
    if (options.bound < 1)
      throw std::invalid_argument("analyze: the entry bound must be positive");
    MpqField f{options.bound};
    for (;;) {
      check_budget();
      RunOutcome r = run_engine(f, n, d, max_deg, s, seed, 0, tb, true);
      if (r.saturated) {
        note_doubling(r.saturated_degree, s);
        s *= 2;
        continue;
      }
      run = std::move(r);
      break;
    }
    led.notes.push_back(
        "exact integer evaluation (entries in [-" + std::to_string(options.bound) + ", " +
        std::to_string(options.bound) + "]); every rank cross-checked by fraction-free elimination");
  } else if (field.is_rational()) {
    auto [p1, p2] = ledger_primes(seed);
    led.notes.push_back("ranks measured modulo two independent primes: " +
                        std::to_string(p1) + " and " + std::to_string(p2) +
                        "; the runs agree on every rank and every generator");
    MontField f1(p1), f2(p2);
    run = dual(f1, f2, p1, p2);
  } else {
    std::uint64_t p = field.characteristic();
    if (p >= (1ULL << 16)) {
      MontField f(p);
      led.notes.push_back(
          "evaluation points drawn from F_p itself; p exceeds every degree in range, so "
          "distinct invariants separate");
      run = dual(f, f, 1, 2);
    } else {
      std::uint64_t q = 1;
      int k = 0;
      while (q < (1ULL << 16)) {
        q *= p;
        ++k;
      }
      if (q <= (1ULL << 24)) {
        const ZechField& f = zech_field(p, k);
        led.notes.push_back(
            "evaluation points drawn from the extension field F_{" + std::to_string(p) +
            "^" + std::to_string(k) + "} (" + std::to_string(q) +
            " elements); points inside F_" + std::to_string(p) +
            " itself would identify distinct invariants");
        run = dual(f, f, 1, 2);
      } else {
        if (static_cast<std::uint64_t>(max_deg) * 4 >= p)
          throw std::runtime_error(
              "analyze: the modulus is too small for this degree bound; invariants need "
              "not separate on so few points");
        MontField f(p);
        led.notes.push_back(
            "evaluation points drawn from F_p itself (extension tables would be too "
            "large); margins are thinner but p still exceeds every degree in range");
        run = dual(f, f, 1, 2);
      }
    }
  }

  led.samples_used = s;
  led.rows = run.rows;
  for (const GenRec& g : run.gens) led.generators.emplace_back(g.t, tb.classes[g.ci]);
  led.max_indecomposable_degree = run.gens.empty() ? 0 : run.gens.back().degree;
  for (int deg : run.tight_degrees)
    led.notes.push_back("degree " + std::to_string(deg) +
                        ": measured rank within " + std::to_string(kSaturationMargin) +
                        " of the column count");
  return led;
}

DegreeWindow expected_window(int n, int d, const FieldDesc& field) {
  DegreeWindow w;
  if (n != 3) return w;
  std::uint64_t p = field.characteristic();
  if (p == 0 || p >= 5) {
    w = {6, 6, true};
  } else if (p == 3) {
    w = {2 * d + 4, 2 * d + 7, true};
  }
  return w;
}

std::string render_ledger(const DegreeLedger& led) {
  std::ostringstream os;
  os << "generator analysis: n=" << led.n << " d=" << led.d
     << " field=" << led.field.to_string() << " degrees 1.." << led.search_bound << "\n";
  os << "seed " << led.seed << ", columns " << led.samples_used;
  if (led.samples_requested > 0)
    os << " (requested " << led.samples_requested << ")";
  else
    os << " (auto)";
  os << "\n\n";
  os << "degree  candidates  product-rank  full-rank  new-generators\n";
  for (const DegreeRow& r : led.rows) {
    os << std::setw(6) << r.degree << "  " << std::setw(10) << r.candidate_count << "  "
       << std::setw(12) << r.decomposable_rank << "  " << std::setw(9) << r.total_rank
       << "  " << std::setw(14) << r.new_generator_count << "\n";
  }
  os << "\ngenerators (" << led.generators.size() << "):\n";
  int cur_deg = -1;
  bool first = true;
  for (const SigmaGen& g : led.generators) {
    if (g.degree() != cur_deg) {
      if (cur_deg != -1) os << "\n";
      cur_deg = g.degree();
      os << "  degree " << cur_deg << ": ";
      first = true;
    }
    if (!first) os << ", ";
    os << format_gen(g);
    first = false;
  }
  if (!led.generators.empty()) os << "\n";
  os << "\nlargest generator degree: ";
  if (led.max_indecomposable_degree > 0)
    os << led.max_indecomposable_degree;
  else
    os << "none found";
  os << " (searched through degree " << led.search_bound << ")\n";
  DegreeWindow w = expected_window(led.n, led.d, led.field);
  if (w.applicable) {
    os << "expected window for the largest generator degree: [" << w.low << ", " << w.high
       << "] -> ";
    if (led.max_indecomposable_degree >= w.low && led.max_indecomposable_degree <= w.high) {
      os << (led.search_bound >= w.high ? "inside" : "inside so far (bound below the window top)");
    } else if (led.max_indecomposable_degree > w.high) {
      os << "ABOVE the window";
    } else if (led.search_bound >= w.high) {
      os << "BELOW the window";
    } else {
      os << "inconclusive (search bound below the window)";
    }
    os << "\n";
  }
  if (!led.notes.empty()) {
    os << "notes:\n";
    for (const std::string& m : led.notes) os << "  - " << m << "\n";
  }
  return os.str();
}

nlohmann::json ledger_json(const DegreeLedger& led) {
  nlohmann::json j;
  j["n"] = led.n;
  j["d"] = led.d;
  j["search_bound"] = led.search_bound;
  j["field"] = led.field.to_string();
  j["seed"] = led.seed;
  j["samples_requested"] = led.samples_requested;
  j["samples_used"] = led.samples_used;
  j["degrees"] = nlohmann::json::array();
  for (const DegreeRow& r : led.rows) {
    j["degrees"].push_back({{"degree", r.degree},
                            {"candidates", r.candidate_count},
                            {"product_rank", r.decomposable_rank},
                            {"full_rank", r.total_rank},
                            {"new_generators", r.new_generator_count}});
  }
  j["generators"] = nlohmann::json::array();
  for (const SigmaGen& g : led.generators) {
    j["generators"].push_back({{"degree", g.degree()},
                               {"t", g.t()},
                               {"class", format_word(g.word_class().rep())},
                               {"symbol", format_gen(g)}});
  }
  j["generator_count"] = led.generators.size();
  j["max_indecomposable_degree"] = led.max_indecomposable_degree;
  DegreeWindow w = expected_window(led.n, led.d, led.field);
  if (w.applicable) {
    j["expected_window"] = {
        {"low", w.low},
        {"high", w.high},
        {"within", led.max_indecomposable_degree >= w.low &&
                       led.max_indecomposable_degree <= w.high},
        {"conclusive", led.search_bound >= w.high}};
  }
  j["notes"] = led.notes;
  return j;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("bareiss_rank: ragged matrix");
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace oinv
