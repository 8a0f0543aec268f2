#include <doctest.h>

#include <oinv/eval.hpp>
#include <oinv/expr.hpp>
#include <oinv/io.hpp>

#include <random>
#include <stdexcept>

#include "common/random_expr.hpp"

using namespace oinv;

namespace {
const FieldDesc Q = FieldDesc::rationals();
std::string norm(const std::string& text, const FieldDesc& F = Q) {
  return format_poly(normalize(parse_expr(text, F)));
}
}  // namespace

TEST_CASE("normalization golden forms") {
  CHECK(norm("s2(x1+x2)") ==
        "1*s1(x1)*s1(x2)-1*s1(x1 x2)+1*s2(x1)+1*s2(x2)");
  CHECK(norm("s1(2*x1)") == "2*s1(x1)");
  CHECK(norm("s2(2*x1)") == "4*s2(x1)");
  CHECK(norm("s1(-x1)") == "-1*s1(x1)");
  CHECK(norm("s2(-x1)") == "1*s2(x1)");
  // Proper powers reduce to the primitive root.
  CHECK(norm("s1(x1 x1)") == "1*s1(x1)^2-2*s2(x1)");
  // Rotation and transposition land on one class representative.
  CHECK(norm("s1(x2 x1)") == norm("s1(x1 x2)"));
  CHECK(norm("s1(x1 x2')") == norm("0*s2(x1)+s1(x2 x1')"));
  CHECK(norm("s3(x1')") == norm("s3(x1)"));
  // Constants fold.
  CHECK(norm("2*s1(x1)-2*s1(x1)+3") == "3");
  CHECK(norm("s1(x1-x1)") == "0");
  CHECK(norm("0*s1(x1)") == "0");
  CHECK(norm("3/2*s1(x1)*s1(x1)") == "3/2*s1(x1)^2");
}

TEST_CASE("normalization over a prime field") {
  auto F5 = FieldDesc::prime(5);
  CHECK(norm("7*s1(x1)", F5) == "2*s1(x1)");
  CHECK(norm("1/2*s1(x1)", F5) == "3*s1(x1)");
  CHECK(norm("s2(x1+x2)", F5) ==
        "1*s1(x1)*s1(x2)+4*s1(x1 x2)+1*s2(x1)+1*s2(x2)");
}

TEST_CASE("expression construction validates") {
  CHECK_THROWS_AS(SigmaExpr::sigma(0, WordSum::of_word(Word::letter(1), Q)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SigmaExpr::sum({}), std::invalid_argument);
  CHECK_THROWS_AS(SigmaExpr::product({}), std::invalid_argument);
  auto mixed = std::vector<SigmaExpr>{
      SigmaExpr::constant(FieldElement::one(Q)),
      SigmaExpr::constant(FieldElement::one(FieldDesc::prime(5)))};
  CHECK_THROWS_AS(SigmaExpr::sum(mixed), std::invalid_argument);
  auto e = SigmaExpr::sigma(2, WordSum::of_word(Word::letter(1), Q));
  CHECK(e.kind() == SigmaExpr::Kind::Sigma);
  CHECK(e.t() == 2);
  CHECK_THROWS_AS(e.children(), std::logic_error);
  CHECK_THROWS_AS(e.constant_value(), std::logic_error);
}

TEST_CASE("sigma of the empty sum vanishes") {
  CHECK(normalize_sigma(2, WordSum(Q)).is_zero());
  CHECK(normalize_sigma(1, WordSum(Q)).is_zero());
}

TEST_CASE("normalized and direct evaluation agree on random expressions") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    auto e = testgen::random_expr(rng, Q, 3, 2, 4);
    auto p = normalize(e);
    for (int n : {2, 3}) {
      for (int rep = 0; rep < 3; ++rep) {
        auto tuple = random_tuple(n, 2, Q, rng(), 5);
        CHECK(eval_poly(p, tuple) == eval_expr_direct(e, tuple));
      }
    }
  }
}

TEST_CASE("normalized and direct evaluation agree over a prime field") {
  std::mt19937_64 rng(32);
  auto F = FieldDesc::prime(101);
  for (int i = 0; i < 10; ++i) {
    auto e = testgen::random_expr(rng, F, 3, 2, 4);
    auto p = normalize(e);
    for (int rep = 0; rep < 3; ++rep) {
      auto tuple = random_tuple(3, 2, F, rng(), 50);
      CHECK(eval_poly(p, tuple) == eval_expr_direct(e, tuple));
    }
  }
}

TEST_CASE("formatting round-trips through the parser") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 15; ++i) {
    auto p = normalize(testgen::random_expr(rng, Q, 2, 2, 3));
    auto back = normalize(parse_expr(format_poly(p), Q));
    CHECK(back == p);
  }
  CHECK(normalize(parse_expr("0", Q)).is_zero());
}
