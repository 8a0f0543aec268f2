#include <doctest.h>

#include <oinv/eval.hpp>
#include <oinv/io.hpp>

#include <random>
#include <stdexcept>

using namespace oinv;

namespace {
const FieldDesc Q = FieldDesc::rationals();

MatrixTuple known_pair() {
  MatrixTuple t;
  t.n = 2;
  t.field = Q;
  Matrix a(2, Q), b(2, Q);
  a.at(0, 0) = FieldElement::integer(Q, 1);
  a.at(0, 1) = FieldElement::integer(Q, 2);
  a.at(1, 0) = FieldElement::integer(Q, 3);
  a.at(1, 1) = FieldElement::integer(Q, 4);
  b.at(0, 0) = FieldElement::integer(Q, 0);
  b.at(0, 1) = FieldElement::integer(Q, 1);
  b.at(1, 0) = FieldElement::integer(Q, -1);
  b.at(1, 1) = FieldElement::integer(Q, 2);
  t.matrices = {a, b};
  return t;
}
}  // namespace

TEST_CASE("random tuples are deterministic and bounded") {
  auto t1 = random_tuple(3, 2, Q, 99, 10);
  auto t2 = random_tuple(3, 2, Q, 99, 10);
  CHECK(t1.n == 3);
  CHECK(t1.count() == 2);
  for (int k = 0; k < 2; ++k) CHECK(t1.matrices[k] == t2.matrices[k]);
  CHECK(random_tuple(3, 2, Q, 100, 10).matrices[0] != t1.matrices[0]);
  for (const auto& m : t1.matrices)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto v = m.at(i, j).rational_value();
        CHECK(v.get_den() == 1);
        CHECK(abs(v.get_num()) <= 10);
      }
}

TEST_CASE("word products follow letter order with transposes") {
  auto tuple = known_pair();
  TupleEvaluator ev(tuple);
  const auto& a = tuple.matrices[0];
  const auto& b = tuple.matrices[1];
  CHECK(ev.word_matrix(parse_word("x1 x2")) == a * b);
  CHECK(ev.word_matrix(parse_word("x2 x1")) == b * a);
  CHECK(ev.word_matrix(parse_word("x1 x1'")) == a * a.transposed());
  CHECK(ev.word_matrix(parse_word("x2'")) == b.transposed());
  CHECK_THROWS_AS(ev.word_matrix(parse_word("x3")), std::out_of_range);

  auto ws = parse_word_sum("x1-2*x2", Q);
  CHECK(ev.word_sum_matrix(ws) ==
        a - b.scaled(FieldElement::integer(Q, 2)));
}

TEST_CASE("generator values come from the characteristic polynomial") {
  auto tuple = known_pair();
  TupleEvaluator ev(tuple);
  auto s1 = SigmaGen(1, canonical(Word::letter(1)));
  auto s2 = SigmaGen(2, canonical(Word::letter(1)));
  auto s3 = SigmaGen(3, canonical(Word::letter(1)));
  CHECK(ev.generator_value(s1) == FieldElement::integer(Q, 5));
  CHECK(ev.generator_value(s2) == FieldElement::integer(Q, -2));
  // Beyond the matrix size every coefficient is zero.
  CHECK(ev.generator_value(s3).is_zero());
  // The value of a class is the value of any representative word.
  auto w = parse_word("x1 x2'");
  auto g = SigmaGen(1, canonical(w));
  CHECK(ev.generator_value(g) == ev.word_matrix(w).trace());
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::mt19937_64 rng(41);
  auto tuple = random_tuple(3, 2, Q, rng(), 6);
  auto e1 = parse_expr("s2(x1+x2)", Q);
  auto e2 = parse_expr("s1(x1 x2')-2*s3(x2)", Q);
  auto p1 = normalize(e1);
  auto p2 = normalize(e2);
  CHECK(eval_poly(p1 + p2, tuple) ==
        eval_poly(p1, tuple) + eval_poly(p2, tuple));
  CHECK(eval_poly(p1 * p2, tuple) ==
        eval_poly(p1, tuple) * eval_poly(p2, tuple));
  CHECK(eval_poly(SigmaPoly::zero(Q), tuple).is_zero());
  // Direct evaluation of s2 over the matrix sum agrees.
  TupleEvaluator ev(tuple);
  Matrix sum = tuple.matrices[0] + tuple.matrices[1];
  CHECK(eval_expr_direct(e1, tuple) == char_coeffs(sum)[1]);
}

TEST_CASE("invariants are blind to signed-permutation conjugation") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 5; ++rep) {
    auto tuple = random_tuple(3, 2, Q, rng(), 5);
    auto p = random_signed_permutation(3, Q, rng());
    MatrixTuple conj = tuple;
    for (auto& m : conj.matrices) m = p.transposed() * m * p;
    TupleEvaluator base(tuple), moved(conj);
    for (const auto& cls : enumerate_classes(2, 3))
      for (int t = 1; t <= 3; ++t) {
        SigmaGen g(t, cls);
        CHECK(base.generator_value(g) == moved.generator_value(g));
      }
  }
}

TEST_CASE("relation verification vanishes above the boundary") {
  auto a = parse_word_sum("x1", Q);
  auto b = parse_word_sum("x2", Q);
  auto c = parse_word_sum("x2'", Q);
  // t + 2r = 3 > 2 = n: must vanish on every tuple.
  auto rep = verify_relation(1, 1, a, b, c, 2, 10, 7);
  CHECK(rep.samples == 10);
  CHECK(rep.all_zero());
  CHECK(!rep.witness.has_value());
  // t + 2r = 3 = n: a boundary case with a nonzero witness.
  auto rep3 = verify_relation(1, 1, a, b, c, 3, 25, 7);
  CHECK(!rep3.all_zero());
  REQUIRE(rep3.witness.has_value());
  // The witness replays: rebuild the tuple from its seed and re-evaluate.
  auto [wseed, wvalue] = *rep3.witness;
  auto poly = substitute(sigma_tr(1, 1), a, b, c);
  auto tuple = random_tuple(3, 2, Q, wseed, 10);
  CHECK(eval_poly(poly, tuple).to_string() == wvalue);
}

TEST_CASE("the sweep is the cross product of direct verifications") {
  auto sweep = relation_sweep(2, 1, 1, 1, 5, 1234);
  CHECK(sweep.n == 2);
  CHECK(sweep.samples == 5);
  REQUIRE(sweep.pairs.size() == 4);  // (2,0),(0,1) boundary; (3,0),(1,1) above
  CHECK(sweep.all_required_vanished);

  // Words of length <= 1 over one symbol: x1 and x1'; plus the one two-term
  // sum case x1 + x2 for the first slot.
  std::vector<WordSum> words = {parse_word_sum("x1", Q),
                                parse_word_sum("x1'", Q)};
  auto linword = parse_word_sum("x1+x2", Q);
  for (const auto& pair : sweep.pairs) {
    long cases = 0, violations = 0, witnesses = 0;
    auto consider = [&](const WordSum& a, const WordSum& b, const WordSum& c) {
      auto rep = verify_relation(pair.t, pair.r, a, b, c, 2, 5, 1234);
      ++cases;
      if (!rep.all_zero()) (pair.required ? violations : witnesses) += 1;
    };
    for (const auto& a : words)
      for (const auto& b : words)
        for (const auto& c : words) consider(a, b, c);
    consider(linword, words[0], words[1]);
    CHECK(pair.cases == cases);
    CHECK(pair.violations == violations);
    CHECK(pair.witnesses == witnesses);
    CHECK(pair.required == (pair.t + 2 * pair.r > 2));
  }

  // Required pairs hold, boundary pairs produce witnesses.
  long required_pairs = 0, witness_total = 0;
  for (const auto& pair : sweep.pairs) {
    if (pair.required) {
      ++required_pairs;
      CHECK(pair.violations == 0);
    }
    witness_total += pair.witnesses;
  }
  CHECK(required_pairs == 2);
  CHECK(sweep.witness_count == witness_total);
  CHECK(witness_total > 0);
  CHECK(sweep.required_case_count > 0);

  // Determinism: the same call reproduces the same summaries.
  auto again = relation_sweep(2, 1, 1, 1, 5, 1234);
  REQUIRE(again.pairs.size() == sweep.pairs.size());
  for (std::size_t i = 0; i < sweep.pairs.size(); ++i) {
    CHECK(again.pairs[i].cases == sweep.pairs[i].cases);
    CHECK(again.pairs[i].violations == sweep.pairs[i].violations);
    CHECK(again.pairs[i].witnesses == sweep.pairs[i].witnesses);
  }
}
