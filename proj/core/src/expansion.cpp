#include "oinv/expansion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace oinv {

namespace {

// ---- polynomials in the symbols e_1, e_2, ... (or p_1, p_2, ...) --------
//
// A monomial is a sorted list of (index, exponent) pairs; coefficients are
// exact rationals.  This is all the machinery the power and trace
// expansions need: the number of monomials is bounded by the number of
// partitions of the total weight, so plain sorted maps are fine.

using EMono = std::vector<std::pair<int, int>>;
using EPoly = std::map<EMono, mpq_class>;

void add_term(EPoly& p, const EMono& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

EMono mono_mul(const EMono& a, const EMono& b) {
  EMono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (a[i].first > b[j].first)
      out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

EPoly poly_mul(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(out, mono_mul(ma, mb), ca * cb);
  return out;
}

void poly_axpy(EPoly& acc, const mpq_class& c, const EPoly& p) {
  for (const auto& [m, k] : p) add_term(acc, m, c * k);
}

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Power sums p_1..p_max written in the e_i, by the classical recurrence
// p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
std::vector<EPoly> power_sums_in_elementary(int max) {
  std::vector<EPoly> p(max + 1);
  for (int k = 1; k <= max; ++k) {
    EPoly acc;
    for (int i = 1; i < k; ++i) {
      for (const auto& [m, c] : p[k - i]) {
        mpq_class v = c;
        if (i % 2 == 0) v = -v;
        add_term(acc, mono_mul(m, {{i, 1}}), v);
      }
    }
    add_term(acc, {{k, 1}}, mpq_class((k % 2 == 1) ? k : -k));
    p[k] = std::move(acc);
  }
  return p;
}

// Order used for printed terms: expand (index, exponent) runs and compare
// the resulting index sequences lexicographically.  All terms of one
// expansion share the same total weight, so this matches the graded order
// used elsewhere.
bool factor_list_less(const std::vector<std::pair<int, int>>& a,
                      const std::vector<std::pair<int, int>>& b) {
  std::size_t ia = 0, ja = 0, ib = 0, jb = 0;
  for (;;) {
    if (ia == a.size()) return ib != b.size();
    if (ib == b.size()) return false;
    int va = a[ia].first, vb = b[ib].first;
    if (va != vb) return va < vb;
    if (++ja == static_cast<std::size_t>(a[ia].second)) ja = 0, ++ia;
    if (++jb == static_cast<std::size_t>(b[ib].second)) jb = 0, ++ib;
  }
}

}  // namespace

// ---- cycles of abstract symbols ------------------------------------------

SymbolCycle::SymbolCycle(std::vector<int> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("empty cycle");
  // Store the least rotation so equal cycles compare equal.
  std::vector<int> best = symbols_;
  for (std::size_t r = 1; r < symbols_.size(); ++r) {
    std::vector<int> cand;
    cand.reserve(symbols_.size());
    cand.insert(cand.end(), symbols_.begin() + r, symbols_.end());
    cand.insert(cand.end(), symbols_.begin(), symbols_.begin() + r);
    if (cand < best) best = std::move(cand);
  }
  symbols_ = std::move(best);
}

std::strong_ordering SymbolCycle::operator<=>(const SymbolCycle& o) const {
  if (auto c = symbols_.size() <=> o.symbols_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      symbols_.begin(), symbols_.end(), o.symbols_.begin(),
      o.symbols_.end());
}

// ---- expansion of s_t over a sum of symbols -------------------------------

namespace {

// All aperiodic cyclic words over {1..p} of length <= maxlen (each as its
// least rotation), generated in lexicographic order by Duval's method.
std::vector<std::vector<int>> aperiodic_cycles(int p, int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> w = {0};
  for (;;) {
    std::vector<int> shifted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] + 1;
    out.push_back(std::move(shifted));
    std::vector<int> x;
    for (int i = 0; static_cast<int>(x.size()) < maxlen; ++i)
      x.push_back(w[i % w.size()]);
    while (!x.empty() && x.back() == p - 1) x.pop_back();
    if (x.empty()) break;
    ++x.back();
    w = std::move(x);
  }
  return out;
}

bool amitsur_factor_less(const AmitsurFactor& a, const AmitsurFactor& b) {
  int da = a.j * static_cast<int>(a.cycle.length());
  int db = b.j * static_cast<int>(b.cycle.length());
  if (da != db) return da < db;
  if (a.j != b.j) return a.j < b.j;
  return a.cycle < b.cycle;
}

bool amitsur_term_less(const AmitsurTerm& a, const AmitsurTerm& b) {
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      amitsur_factor_less);
}

}  // namespace

AmitsurExpansion amitsur_expand(int t, int p) {
  if (t < 1) throw std::invalid_argument("sigma index must be >= 1");
  if (p < 1) throw std::invalid_argument("need at least one summand");

  std::vector<SymbolCycle> cycles;
  for (auto& symbols : aperiodic_cycles(p, t))
    cycles.emplace_back(std::move(symbols));

  AmitsurExpansion out;
  out.t = t;
  out.p = p;

  // Choose an exponent j >= 0 for each cycle so that sum j*|cycle| == t;
  // every cycle with j >= 1 contributes a factor s_j(cycle).
  std::vector<AmitsurFactor> chosen;
  int jsum = 0;
  auto dfs = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      AmitsurTerm term;
      term.sign = ((t + jsum) % 2 == 0) ? 1 : -1;
      term.factors = chosen;
      std::sort(term.factors.begin(), term.factors.end(),
                amitsur_factor_less);
      out.terms.push_back(std::move(term));
      return;
    }
    if (idx == cycles.size()) return;
    int len = static_cast<int>(cycles[idx].length());
    self(self, idx + 1, remaining);  // j = 0
    for (int j = 1; j * len <= remaining; ++j) {
      chosen.push_back(AmitsurFactor{j, cycles[idx]});
      jsum += j;
      self(self, idx + 1, remaining - j * len);
      jsum -= j;
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, t);

  std::sort(out.terms.begin(), out.terms.end(), amitsur_term_less);
  return out;
}

// ---- expansion of s_t of a power ------------------------------------------

namespace {

PowerExpansion compute_power_expansion(int t, int l) {
  // Generating function identity: with E(z) = prod_i (1 + x_i z) and
  // p_k the power sums, the series for the l-th powers satisfies
  //   prod_i (1 + x_i^l z) = exp( sum_{m>=1} (-1)^{m-1} p_{lm} z^m / m ),
  // and the z^t coefficient is the wanted expansion.  Working in the e_i
  // keeps every polynomial supported on partitions of t*l.
  std::vector<EPoly> psums = power_sums_in_elementary(t * l);

  std::vector<EPoly> g(t + 1);  // g[m] = z^m coefficient of the log series
  for (int m = 1; m <= t; ++m) {
    mpq_class c = frac(1, m);
    if (m % 2 == 0) c = -c;
    for (const auto& [mono, k] : psums[l * m]) add_term(g[m], mono, c * k);
  }

  // exp via E_0 = 1, m E_m = sum_{i=1}^m i g_i E_{m-i}.
  std::vector<EPoly> e(t + 1);
  add_term(e[0], {}, 1);
  for (int m = 1; m <= t; ++m) {
    EPoly acc;
    for (int i = 1; i <= m; ++i) {
      if (g[i].empty() || e[m - i].empty()) continue;
      EPoly prod = poly_mul(g[i], e[m - i]);
      poly_axpy(acc, frac(i, m), prod);
    }
    e[m] = std::move(acc);
  }

  PowerExpansion out;
  out.t = t;
  out.l = l;
  for (const auto& [mono, c] : e[t]) {
    if (c.get_den() != 1)
      throw std::logic_error("power expansion produced a non-integer");
    out.terms.push_back(PowerTerm{c.get_num(), mono});
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const PowerTerm& a, const PowerTerm& b) {
              return factor_list_less(a.powers, b.powers);
            });
  return out;
}

}  // namespace

const PowerExpansion& power_expand(int t, int l) {
  if (t < 1) throw std::invalid_argument("sigma index must be >= 1");
  if (l < 1) throw std::invalid_argument("power must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const PowerExpansion>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t, l);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, std::make_unique<const PowerExpansion>(
                               compute_power_expansion(t, l)))
             .first;
  }
  return *it->second;
}

// ---- s_t in terms of power traces -----------------------------------------

NewtonExpansion newton_traces(int t, const FieldDesc& field) {
  if (t < 1) throw std::invalid_argument("sigma index must be >= 1");
  if (!field.is_rational() && field.characteristic() <= static_cast<std::uint64_t>(t))
    throw std::domain_error(
        "trace expansion needs characteristic 0 or > " + std::to_string(t));

  // e_k = (1/k) sum_{i=1}^k (-1)^{i-1} p_i e_{k-i}, in the ring Q[p_1..p_t].
  std::vector<EPoly> e(t + 1);
  add_term(e[0], {}, 1);
  for (int k = 1; k <= t; ++k) {
    EPoly acc;
    for (int i = 1; i <= k; ++i) {
      mpq_class c = frac(1, k);
      if (i % 2 == 0) c = -c;
      for (const auto& [mono, v] : e[k - i])
        add_term(acc, mono_mul(mono, {{i, 1}}), c * v);
    }
    e[k] = std::move(acc);
  }

  NewtonExpansion out;
  out.t = t;
  out.field = field;
  for (const auto& [mono, c] : e[t])
    out.terms.push_back(NewtonTerm{FieldElement::from_mpq(field, c), mono});
  std::sort(out.terms.begin(), out.terms.end(),
            [](const NewtonTerm& a, const NewtonTerm& b) {
              return factor_list_less(a.powers, b.powers);
            });
  return out;
}

}  // namespace oinv
