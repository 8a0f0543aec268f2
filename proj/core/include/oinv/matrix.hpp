#pragma once

// Dense square matrices over an exact field, and the coefficients s_1..s_n
// of the characteristic polynomial computed two independent ways: a
// trace-based recurrence (rationals only: it divides by 1..n) and a
// division-free expansion valid over any field.

#include <cstdint>
#include <vector>

#include "oinv/field.hpp"

namespace oinv {

class Matrix {
 public:
  Matrix(int n, const FieldDesc& field);
  static Matrix identity(int n, const FieldDesc& field);

  int size() const { return n_; }
  const FieldDesc& field() const { return field_; }
  FieldElement& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const FieldElement& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const FieldElement& c) const;
  Matrix transposed() const;
  FieldElement trace() const;

  bool operator==(const Matrix& o) const;

 private:
  int n_;
  FieldDesc field_;
  std::vector<FieldElement> a_;  // row-major
};

// s_t = (-1)^t * (coefficient of lambda^{n-t} in det(lambda*I - A)),
// equivalently the t-th elementary symmetric function of the eigenvalues,
// for t = 1..n (index 0 of the result is s_1).

// Trace recurrence; requires a rational matrix (throws otherwise).
std::vector<FieldElement> char_coeffs_traces(const Matrix& a);

// Division-free expansion; any field.
std::vector<FieldElement> char_coeffs_berkowitz(const Matrix& a);

// Dispatch: trace recurrence over the rationals, division-free otherwise.
std::vector<FieldElement> char_coeffs(const Matrix& a);

// Deterministic pseudo-random signed permutation matrix (entries 0, +1, -1;
// exactly one nonzero per row and column).  These lie in the orthogonal
// group, so conjugating a tuple by one must fix every invariant value.
Matrix random_signed_permutation(int n, const FieldDesc& field,
                                 std::uint64_t seed);

}  // namespace oinv
