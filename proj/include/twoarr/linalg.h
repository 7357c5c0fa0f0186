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

// Exact dense linear algebra over the rationals. Nothing in this library
// touches floating point.

#ifndef TWOARR_LINALG_H_
#define TWOARR_LINALG_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twoarr {

using Integer = boost::multiprecision::cpp_int;
// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;

// Accepts an optional sign, digits, and an optional "/" positive denominator.
// Throws Error(kParse) on anything else.
Rational ParseRational(std::string_view text);
std::string FormatRational(const Rational& value);

// Sign of a rational as -1, 0 or +1.
int Sign(const Rational& value);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix FromRows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix FromRows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> Row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector Column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix Transpose() const;
  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

std::size_t Rank(const Matrix& m);

// Reduced row echelon form. Pivots are the first nonzero entry found scanning
// columns left to right; nonzero rows come first, in pivot order.
Echelon Rref(const Matrix& m);

// The unique x with a * x == b. Throws Error(kNotUnique) when the columns of
// `a` are dependent and Error(kNoSolution) when b is outside their span.
Vector SolveUnique(const Matrix& a, const Vector& b);

// One basis vector per free column of Rref(m), in column order.
std::vector<Vector> KernelBasis(const Matrix& m);

// Throws Error(kNotSquare) for non-square input.
int DetSign(const Matrix& m);
Rational Determinant(const Matrix& m);

}  // namespace twoarr

#endif  // TWOARR_LINALG_H_
