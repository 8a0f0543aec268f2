#include "oinv/eval.hpp"

#include <random>
#include <stdexcept>

namespace oinv {

MatrixTuple random_tuple(int n, int d, const FieldDesc& field,
                         std::uint64_t seed, long bound) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n >= 1 and d >= 1");
  if (bound < 1) throw std::invalid_argument("entry bound must be >= 1");
  std::mt19937_64 rng(seed);
  std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  MatrixTuple tuple;
  tuple.n = n;
  tuple.field = field;
  for (int k = 0; k < d; ++k) {
    Matrix m(n, field);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long v = static_cast<long>(rng() % span) - bound;
        m.at(i, j) = FieldElement::integer(field, v);
      }
    tuple.matrices.push_back(std::move(m));
  }
  return tuple;
}

TupleEvaluator::TupleEvaluator(MatrixTuple tuple) : tuple_(std::move(tuple)) {
  if (tuple_.matrices.empty())
    throw std::invalid_argument("empty matrix tuple");
  for (const Matrix& m : tuple_.matrices)
    if (m.size() != tuple_.n || !(m.field() == tuple_.field))
      throw std::invalid_argument("inconsistent matrix tuple");
}

const Matrix& TupleEvaluator::word_matrix(const Word& w) {
  auto it = words_.find(w);
  if (it != words_.end()) return it->second;

  auto letter_matrix = [&](const Letter& a) -> Matrix {
    if (a.index > tuple_.count())
      throw std::out_of_range("word uses symbol x" + std::to_string(a.index) +
                              " but the tuple has " +
                              std::to_string(tuple_.count()) + " matrices");
    const Matrix& base = tuple_.matrices[a.index - 1];
    return a.transposed ? base.transposed() : base;
  };

  Matrix acc = letter_matrix(w.letters().front());
  for (std::size_t i = 1; i < w.size(); ++i)
    acc = acc * letter_matrix(w.letters()[i]);
  return words_.emplace(w, std::move(acc)).first->second;
}

Matrix TupleEvaluator::word_sum_matrix(const WordSum& ws) {
  if (!(ws.field() == tuple_.field))
    throw std::invalid_argument("coefficient field mismatch");
  Matrix acc(tuple_.n, tuple_.field);
  for (const auto& [w, c] : ws.terms()) acc = acc + word_matrix(w).scaled(c);
  return acc;
}

FieldElement TupleEvaluator::generator_value(const SigmaGen& g) {
  if (g.t() > tuple_.n) return FieldElement::zero(tuple_.field);
  const Word& rep = g.word_class().rep();
  auto it = sigmas_.find(rep);
  if (it == sigmas_.end())
    it = sigmas_.emplace(rep, char_coeffs(word_matrix(rep))).first;
  return it->second[g.t() - 1];
}

FieldElement TupleEvaluator::eval(const SigmaPoly& p) {
  if (!(p.field() == tuple_.field))
    throw std::invalid_argument("coefficient field mismatch");
  FieldElement acc = FieldElement::zero(tuple_.field);
  for (const auto& [mono, coeff] : p.terms()) {
    FieldElement term = coeff;
    for (const SigmaGen& g : mono.factors()) term *= generator_value(g);
    acc += term;
  }
  return acc;
}

FieldElement TupleEvaluator::eval_direct(const SigmaExpr& e) {
  switch (e.kind()) {
    case SigmaExpr::Kind::Constant:
      return e.constant_value();
    case SigmaExpr::Kind::Sigma: {
      if (e.t() > tuple_.n) return FieldElement::zero(tuple_.field);
      Matrix m = word_sum_matrix(e.argument());
      return char_coeffs(m)[e.t() - 1];
    }
    case SigmaExpr::Kind::Sum: {
      FieldElement acc = FieldElement::zero(tuple_.field);
      for (const SigmaExpr& c : e.children()) acc += eval_direct(c);
      return acc;
    }
    case SigmaExpr::Kind::Product: {
      FieldElement acc = FieldElement::one(tuple_.field);
      for (const SigmaExpr& c : e.children()) acc *= eval_direct(c);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

FieldElement eval_poly(const SigmaPoly& p, const MatrixTuple& tuple) {
  TupleEvaluator ev(tuple);
  return ev.eval(p);
}

FieldElement eval_expr_direct(const SigmaExpr& e, const MatrixTuple& tuple) {
  TupleEvaluator ev(tuple);
  return ev.eval_direct(e);
}

namespace {

int substitution_width(const WordSum& a, const WordSum& b, const WordSum& c) {
  return std::max(1, std::max(a.max_index(),
                              std::max(b.max_index(), c.max_index())));
}

EvalReport run_relation_case(const SigmaPoly& substituted, int width, int n,
                             int samples, std::uint64_t seed, long bound,
                             std::vector<TupleEvaluator>* shared) {
  EvalReport report;
  report.samples = samples;
  auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < samples; ++i) {
    FieldElement value = FieldElement::zero(substituted.field());
    if (shared) {
      value = (*shared)[i].eval(substituted);
    } else {
      TupleEvaluator ev(random_tuple(n, width, substituted.field(),
                                     seed + static_cast<std::uint64_t>(i),
                                     bound));
      value = ev.eval(substituted);
    }
    if (value.is_zero()) {
      ++report.zero_count;
    } else if (!report.witness) {
      report.witness = {seed + static_cast<std::uint64_t>(i),
                        value.to_string()};
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

EvalReport verify_relation(int t, int r, const WordSum& a, const WordSum& b,
                           const WordSum& c, int n, int samples,
                           std::uint64_t seed, long bound) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  SigmaPoly substituted = substitute(sigma_tr(t, r), a, b, c);
  return run_relation_case(substituted, substitution_width(a, b, c), n,
                           samples, seed, bound, nullptr);
}

SweepResult relation_sweep(int n, int max_excess, int word_len, int d,
                           int samples, std::uint64_t seed, long bound) {
  if (n < 1 || max_excess < 1 || word_len < 1 || d < 1 || samples < 1)
    throw std::invalid_argument("sweep parameters must be >= 1");

  FieldDesc field = FieldDesc::rationals();

  // Substitution choices: all words of length <= word_len over x_1..x_d and
  // transposes, plus the two-term sum x_1 + x_2 (for the a slot only).
  std::vector<WordSum> words;
  {
    std::vector<Letter> alphabet;
    for (int k = 1; k <= d; ++k) {
      alphabet.push_back(Letter{k, false});
      alphabet.push_back(Letter{k, true});
    }
    for (int len = 1; len <= word_len; ++len) {
      std::vector<std::size_t> ranks(len, 0);
      for (;;) {
        std::vector<Letter> letters(len);
        for (int i = 0; i < len; ++i) letters[i] = alphabet[ranks[i]];
        words.push_back(WordSum::of_word(Word(std::move(letters)), field));
        int pos = len - 1;
        while (pos >= 0 && ranks[pos] + 1 == alphabet.size()) {
          ranks[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++ranks[pos];
      }
    }
  }
  WordSum linear(field);
  linear.add(Word::letter(1), FieldElement::one(field));
  linear.add(Word::letter(2), FieldElement::one(field));

  // (t, r) pairs: every required case n < t + 2r <= n + max_excess, and the
  // boundary t + 2r = n as sanity witnesses (those must not vanish
  // identically).
  std::vector<std::tuple<int, int, bool>> pairs;  // (t, r, required)
  for (int total = n + 1; total <= n + max_excess; ++total)
    for (int r = 0; 2 * r <= total; ++r) pairs.emplace_back(total - 2 * r, r, true);
  for (int r = 0; 2 * r <= n; ++r) pairs.emplace_back(n - 2 * r, r, false);

  // Tuples are shared across cases: the evaluation of a case only reads the
  // matrices its words mention, so each case sees exactly the tuples a
  // standalone verify_relation call with the same seed would build.
  int width = std::max(2, d);
  std::vector<TupleEvaluator> evaluators;
  evaluators.reserve(samples);
  for (int i = 0; i < samples; ++i)
    evaluators.emplace_back(random_tuple(
        n, width, field, seed + static_cast<std::uint64_t>(i), bound));

  SweepResult result;
  result.n = n;
  result.seed = seed;
  result.samples = samples;
  constexpr std::size_t kFlagCap = 1024;

  for (const auto& [t, r, required] : pairs) {
    SweepPairSummary summary;
    summary.t = t;
    summary.r = r;
    summary.required = required;
    bool witness_flagged = false;

    auto run_case = [&](const WordSum& a, const WordSum& b,
                        const WordSum& c) {
      SigmaPoly substituted = substitute(sigma_tr(t, r), a, b, c);
      EvalReport report = run_relation_case(substituted, width, n, samples,
                                            seed, bound, &evaluators);
      ++summary.cases;
      if (required) {
        ++result.required_case_count;
        if (!report.all_zero()) {
          ++summary.violations;
          result.all_required_vanished = false;
          if (result.flagged.size() < kFlagCap)
            result.flagged.push_back(SweepCase{t, r, a, b, c, required, report});
        }
      } else if (report.witness) {
        ++summary.witnesses;
        ++result.witness_count;
        if (!witness_flagged && result.flagged.size() < kFlagCap) {
          result.flagged.push_back(SweepCase{t, r, a, b, c, required, report});
          witness_flagged = true;
        }
      }
    };

    for (const WordSum& wa : words)
      for (const WordSum& wb : words)
        for (const WordSum& wc : words) run_case(wa, wb, wc);
    run_case(linear, words[0], words[1]);

    result.pairs.push_back(summary);
  }
  return result;
}

}  // namespace oinv
