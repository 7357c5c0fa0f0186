// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twoarr/linalg.h"

#include <cctype>
#include <utility>

#include "twoarr/error.h"

namespace twoarr {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
    if (!AllDigits(den)) {
      throw Error(ErrorKind::kParse,
                  "malformed rational '" + std::string(text) + "'");
    }
  }
  if (!AllDigits(num)) {
    throw Error(ErrorKind::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d = den.empty() ? Integer(1) : Integer{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string FormatRational(const Rational& value) {
  const Integer& den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

int Sign(const Rational& value) { return value.sign(); }

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols,
               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

Matrix Matrix::FromRows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::FromRows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> v;
  for (const auto& row : rows) v.emplace_back(row);
  return FromRows(v, v.empty() ? 0 : v.front().size());
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::Column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::Transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("shape mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (other.rows_ != cols_) throw std::invalid_argument("shape mismatch");
  Matrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  }
  return p;
}

Echelon Rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t found = row;
    while (found < a.rows() && a(found, col) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(found, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t Rank(const Matrix& m) { return Rref(m).pivots.size(); }

Vector SolveUnique(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("shape mismatch");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  Echelon e = Rref(augmented);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    throw Error(ErrorKind::kNoSolution, "right-hand side outside column span");
  }
  if (e.pivots.size() != a.cols()) {
    throw Error(ErrorKind::kNotUnique, "columns are linearly dependent");
  }
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

std::vector<Vector> KernelBasis(const Matrix& m) {
  Echelon e = Rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = -e.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational Determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kNotSquare, "determinant of a non-square matrix");
  }
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = col;
    while (found < n && a(found, col) == 0) ++found;
    if (found == n) return 0;
    if (found != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(found, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

int DetSign(const Matrix& m) { return Sign(Determinant(m)); }

}  // namespace twoarr
