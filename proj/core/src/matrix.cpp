#include "oinv/matrix.hpp"

#include <random>
#include <stdexcept>

namespace oinv {

Matrix::Matrix(int n, const FieldDesc& field) : n_(n), field_(field) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * n, FieldElement::zero(field));
}

Matrix Matrix::identity(int n, const FieldDesc& field) {
  Matrix m(n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (n_ != o.n_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix shape or field mismatch");
  Matrix out(n_, field_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (n_ != o.n_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix shape or field mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (n_ != o.n_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix shape or field mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Matrix Matrix::scaled(const FieldElement& c) const {
  Matrix out = *this;
  for (FieldElement& v : out.a_) v *= c;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(n_, field_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

FieldElement Matrix::trace() const {
  FieldElement t = FieldElement::zero(field_);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  return n_ == o.n_ && field_ == o.field_ && a_ == o.a_;
}

std::vector<FieldElement> char_coeffs_traces(const Matrix& a) {
  if (!a.field().is_rational())
    throw std::invalid_argument(
        "trace recurrence requires rational coefficients");
  int n = a.size();
  const FieldDesc& f = a.field();
  // B_1 = A, c_k = -tr(B_k)/k, B_k = A (B_{k-1} + c_{k-1} I); then the
  // characteristic polynomial is lambda^n + c_1 lambda^{n-1} + ... + c_n
  // and s_t = (-1)^t c_t.
  std::vector<FieldElement> out;
  out.reserve(n);
  Matrix b = a;
  FieldElement c = FieldElement::zero(f);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix shifted = b;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c;
      b = a * shifted;
    }
    c = -(b.trace() * FieldElement::rational(1, k));
    out.push_back(k % 2 == 0 ? c : -c);
  }
  return out;
}

std::vector<FieldElement> char_coeffs_berkowitz(const Matrix& a) {
  int n = a.size();
  const FieldDesc& f = a.field();
  FieldElement one = FieldElement::one(f);

  // v holds the coefficients of det(lambda*I - A_m) for the leading m x m
  // block, highest power first; each step applies a Toeplitz transform
  // built from the new row/column, with no divisions.
  std::vector<FieldElement> v{one};
  for (int m = 1; m <= n; ++m) {
    // q[k] = row . M^k . col for the (m-1)-sized block M.
    std::vector<FieldElement> q;
    if (m >= 2) {
      std::vector<FieldElement> w(m - 1);
      for (int i = 0; i < m - 1; ++i) w[i] = a.at(i, m - 1);
      for (int k = 0; k <= m - 2; ++k) {
        FieldElement dot = FieldElement::zero(f);
        for (int i = 0; i < m - 1; ++i) dot += a.at(m - 1, i) * w[i];
        q.push_back(dot);
        if (k < m - 2) {
          std::vector<FieldElement> next(m - 1, FieldElement::zero(f));
          for (int i = 0; i < m - 1; ++i) {
            if (w[i].is_zero()) continue;
            for (int r = 0; r < m - 1; ++r) next[r] += a.at(r, i) * w[i];
          }
          w = std::move(next);
        }
      }
    }
    // First column of the Toeplitz matrix: 1, -a_mm, -q_0, -q_1, ...
    std::vector<FieldElement> col;
    col.push_back(one);
    col.push_back(-a.at(m - 1, m - 1));
    for (FieldElement& x : q) col.push_back(-x);

    std::vector<FieldElement> next(m + 1, FieldElement::zero(f));
    for (int i = 0; i <= m; ++i)
      for (std::size_t j = 0; j < v.size(); ++j) {
        int shift = i - static_cast<int>(j);
        if (shift < 0 || shift >= static_cast<int>(col.size())) continue;
        next[i] += col[shift] * v[j];
      }
    v = std::move(next);
  }

  // v[t] is the lambda^{n-t} coefficient of det(lambda*I - A).
  std::vector<FieldElement> out;
  out.reserve(n);
  FieldElement sign = one;
  for (int t = 1; t <= n; ++t) {
    sign = -sign;
    out.push_back(sign * v[t]);
  }
  return out;
}

std::vector<FieldElement> char_coeffs(const Matrix& a) {
  return a.field().is_rational() ? char_coeffs_traces(a)
                                 : char_coeffs_berkowitz(a);
}

Matrix random_signed_permutation(int n, const FieldDesc& field,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // Fisher-Yates with the raw generator so results are identical everywhere.
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  Matrix m(n, field);
  FieldElement one = FieldElement::one(field);
  for (int i = 0; i < n; ++i)
    m.at(i, perm[i]) = (rng() & 1) ? -one : one;
  return m;
}

}  // namespace oinv
