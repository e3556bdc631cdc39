/*
 *   Copyright 2026 The sbawb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Dense and sparse exact linear algebra over a prime field.
//
// Vectors are rows: a matrix with r rows and c columns is a linear map
// F_q^r -> F_q^c acting on the right, x |-> x * A. Module code relies on
// this convention throughout.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sba/field.hpp"

namespace sba {

class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  /// Builds a matrix from signed integers, reduced mod q.
  static Matrix from_ints(PrimeField field, std::size_t rows, std::size_t cols,
                          std::span<const std::int64_t> entries);
  /// Rows given as vectors of equal length `cols`.
  static Matrix from_rows(PrimeField field, std::size_t cols,
                          const std::vector<Vector>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Residue& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::span<const Residue> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Residue> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const {
    return Vector(row(i).begin(), row(i).end());
  }
  const Vector& data() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transposed() const;
  Matrix scaled(Residue s) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vector operator*(const Vector& x, const Matrix& a);

/// Stacks a on top of b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);
/// Places a left of b (equal row counts).
Matrix hstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form in place. Returns the pivot columns; rows past
/// the rank are zero.
std::vector<std::size_t> row_reduce(Matrix& a);
std::size_t rank(Matrix a);

/// Basis of {x : A x = 0} (column convention), one vector per free column of
/// the reduced echelon form, with 1 in that free position.
std::vector<Vector> kernel_basis(const Matrix& a);
/// Basis of {x : x A = 0}, returned as the rows of a matrix.
Matrix left_kernel(const Matrix& a);
/// A solution of A x = b (column convention), if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// A solution of x A = b (row convention), if one exists.
std::optional<Vector> solve_left(const Matrix& a, const Vector& b);

/// Row space basis in reduced echelon form (nonzero rows only).
Matrix row_space(const Matrix& a);
/// Determinant by elimination.
Residue determinant(Matrix a);

/// Linear system with few nonzero coefficients per equation, solved by
/// sparse elimination. Used for intertwiner spaces, whose defining equations
/// have a handful of terms each even when the number of unknowns is large.
class SparseSystem {
 public:
  using Term = std::pair<std::size_t, Residue>;

  SparseSystem(PrimeField field, std::size_t unknowns);

  std::size_t unknowns() const noexcept { return unknowns_; }
  /// Adds the homogeneous equation sum(coefficient * x[index]) = 0.
  void add_equation(std::vector<Term> terms);
  std::size_t rank() const noexcept { return rank_; }
  /// Basis of the solution space; same normalization as kernel_basis.
  std::vector<Vector> kernel_basis() const;
  /// Columns without a pivot, ascending; basis vector i is 1 at entry i of
  /// this list and 0 at the others.
  std::vector<std::size_t> free_columns() const;

 private:
  using Row = std::vector<Term>;

  PrimeField field_;
  std::size_t unknowns_;
  std::size_t rank_ = 0;
  std::vector<std::ptrdiff_t> pivot_row_;  // by column, -1 if none
  std::vector<Row> rows_;
};

}  // namespace sba
