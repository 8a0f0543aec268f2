#include <doctest.h>

#include <oinv/eval.hpp>
#include <oinv/expansion.hpp>
#include <oinv/io.hpp>
#include <oinv/matrix.hpp>

#include <random>
#include <stdexcept>
#include <type_traits>

using namespace oinv;

namespace {

// Coefficient s_j of the product of the matrices along a cycle, read left to
// right.  The expansion contains every cyclic class, and reversal pairs
// classes with equal s_j (AB and BA are conjugate in the char-poly sense),
// so the reading direction cannot change the total.
FieldElement eval_amitsur(const AmitsurExpansion& e,
                          const std::vector<Matrix>& mats) {
  const auto& F = mats.front().field();
  int n = mats.front().size();
  auto total = FieldElement::zero(F);
  for (const auto& term : e.terms) {
    auto v = FieldElement::integer(F, term.sign);
    for (const auto& factor : term.factors) {
      Matrix prod = Matrix::identity(n, F);
      for (int s : factor.cycle.symbols()) prod = prod * mats[static_cast<std::size_t>(s) - 1];
      if (factor.j > n) {
        v = FieldElement::zero(F);
        break;
      }
      v *= char_coeffs(prod)[static_cast<std::size_t>(factor.j) - 1];
    }
    total += v;
  }
  return total;
}

FieldElement eval_powers(const std::vector<std::pair<int, int>>& powers,
                         const std::vector<FieldElement>& sig,
                         const FieldDesc& F) {
  auto v = FieldElement::one(F);
  for (auto [i, e] : powers) {
    auto base = static_cast<std::size_t>(i) <= sig.size()
                    ? sig[static_cast<std::size_t>(i) - 1]
                    : FieldElement::zero(F);
    v *= base.pow(static_cast<unsigned long>(e));
  }
  return v;
}

}  // namespace

TEST_CASE("sum expansion golden forms") {
  CHECK(format_amitsur(amitsur_expand(1, 2)) == "1*s1(A1)+1*s1(A2)");
  CHECK(format_amitsur(amitsur_expand(3, 1)) == "1*s3(A1)");
  CHECK(format_amitsur(amitsur_expand(2, 2)) ==
        "1*s1(A1)*s1(A2)-1*s1(A1 A2)+1*s2(A1)+1*s2(A2)");
  CHECK_THROWS_AS(amitsur_expand(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(amitsur_expand(1, 0), std::invalid_argument);
}

TEST_CASE("sum expansion matches the characteristic coefficients of a sum") {
  std::mt19937_64 rng(11);
  auto F = FieldDesc::rationals();
  for (int t = 1; t <= 4; ++t)
    for (int p = 1; p <= 3; ++p) {
      auto e = amitsur_expand(t, p);
      CHECK(e.t == t);
      CHECK(e.p == p);
      for (int rep = 0; rep < 3; ++rep) {
        auto tuple = random_tuple(4, p, F, rng(), 5);
        Matrix sum(4, F);
        for (const auto& m : tuple.matrices) sum = sum + m;
        CHECK(eval_amitsur(e, tuple.matrices) == char_coeffs(sum)[t - 1]);
      }
    }
}

TEST_CASE("power expansion golden forms and integer coefficients") {
  static_assert(std::is_same_v<decltype(PowerTerm::coeff), mpz_class>);
  CHECK(format_power(power_expand(1, 2)) == "1*s1(A)^2-2*s2(A)");
  CHECK(format_power(power_expand(2, 2)) ==
        "-2*s1(A)*s3(A)+1*s2(A)^2+2*s4(A)");
  CHECK(format_power(power_expand(1, 1)) == "1*s1(A)");
  // The cache hands out one instance per (t, l).
  CHECK(&power_expand(3, 2) == &power_expand(3, 2));
  CHECK_THROWS_AS(power_expand(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(power_expand(1, 0), std::invalid_argument);
}

TEST_CASE("power expansion evaluates to the char coefficients of a power") {
  std::mt19937_64 rng(12);
  auto F = FieldDesc::rationals();
  for (int t = 1; t * 1 <= 6; ++t)
    for (int l = 1; t * l <= 6; ++l) {
      const auto& e = power_expand(t, l);
      for (int rep = 0; rep < 3; ++rep) {
        // n = 6 keeps every s_i with i <= t*l alive, n = 3 exercises the
        // truncation s_i = 0 for i > n.
        for (int n : {6, 3}) {
          auto tuple = random_tuple(n, 1, F, rng(), 4);
          const Matrix& a = tuple.matrices.front();
          auto sig = char_coeffs(a);
          Matrix power = Matrix::identity(n, F);
          for (int i = 0; i < l; ++i) power = power * a;
          auto want = t <= n ? char_coeffs(power)[t - 1] : FieldElement::zero(F);
          auto got = FieldElement::zero(F);
          for (const auto& term : e.terms)
            got += FieldElement::from_mpq(F, mpq_class(term.coeff)) *
                   eval_powers(term.powers, sig, F);
          CHECK(got == want);
        }
      }
    }
}

TEST_CASE("power expansion holds verbatim over a prime field") {
  std::mt19937_64 rng(13);
  auto F = FieldDesc::prime(7);
  for (auto [t, l] : {std::pair{2, 2}, {1, 3}, {3, 2}}) {
    const auto& e = power_expand(t, l);
    for (int rep = 0; rep < 3; ++rep) {
      auto tuple = random_tuple(6, 1, F, rng(), 6);
      const Matrix& a = tuple.matrices.front();
      auto sig = char_coeffs(a);
      Matrix power = Matrix::identity(6, F);
      for (int i = 0; i < l; ++i) power = power * a;
      auto got = FieldElement::zero(F);
      for (const auto& term : e.terms)
        got += FieldElement::from_mpq(F, mpq_class(term.coeff)) *
               eval_powers(term.powers, sig, F);
      CHECK(got == char_coeffs(power)[t - 1]);
    }
  }
}

TEST_CASE("trace expansion golden forms") {
  CHECK(format_newton(newton_traces(1, FieldDesc::rationals())) == "1*s1(A)");
  CHECK(format_newton(newton_traces(2, FieldDesc::rationals())) ==
        "1/2*s1(A)^2-1/2*s1(A^2)");
  CHECK(format_newton(newton_traces(3, FieldDesc::rationals())) ==
        "1/6*s1(A)^3-1/2*s1(A)*s1(A^2)+1/3*s1(A^3)");
  CHECK_THROWS_AS(newton_traces(0, FieldDesc::rationals()),
                  std::invalid_argument);
}

TEST_CASE("trace expansion evaluates to the char coefficients") {
  std::mt19937_64 rng(14);
  for (const auto& F : {FieldDesc::rationals(), FieldDesc::prime(7)}) {
    for (int t = 1; t <= 5; ++t) {
      if (!F.is_rational() && F.characteristic() <= static_cast<unsigned>(t))
        break;
      auto e = newton_traces(t, F);
      CHECK(e.field == F);
      for (int rep = 0; rep < 3; ++rep) {
        auto tuple = random_tuple(5, 1, F, rng(), 5);
        const Matrix& a = tuple.matrices.front();
        // Power traces s_1(A^i).
        std::vector<FieldElement> traces;
        Matrix power = Matrix::identity(5, F);
        for (int i = 1; i <= t; ++i) {
          power = power * a;
          traces.push_back(power.trace());
        }
        auto got = FieldElement::zero(F);
        for (const auto& term : e.terms)
          got += term.coeff * eval_powers(term.powers, traces, F);
        CHECK(got == char_coeffs(a)[t - 1]);
      }
    }
  }
}

TEST_CASE("trace expansion refuses characteristics at or below t") {
  CHECK_THROWS_AS(newton_traces(3, FieldDesc::prime(3)), std::domain_error);
  CHECK_THROWS_AS(newton_traces(5, FieldDesc::prime(5)), std::domain_error);
  CHECK_THROWS_AS(newton_traces(7, FieldDesc::prime(5)), std::domain_error);
  CHECK_NOTHROW(newton_traces(2, FieldDesc::prime(3)));
  CHECK_NOTHROW(newton_traces(4, FieldDesc::prime(5)));
}
