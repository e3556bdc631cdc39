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

#include "sba/linalg.hpp"

#include <algorithm>
#include <string>

#include "sba/error.hpp"

namespace sba {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

}  // namespace

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(PrimeField field, std::size_t rows, std::size_t cols,
                         std::span<const std::int64_t> entries) {
  require(entries.size() == rows * cols, "entry count does not match shape");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    m.data_[k] = field.from_int(entries[k]);
  }
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length does not match column count");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Residue r) { return r == 0; });
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(Residue s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = field_.mul(x, s);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_,
          "block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  const PrimeField& f = a.field();
  const std::uint64_t q = f.order();
  Matrix c(f, a.rows(), b.cols());
  // Accumulate in 64 bits and reduce lazily: each product is < 2^62 / 2^31.
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        acc[j] = (acc[j] + aik * brow[j]) % q;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      c(i, j) = static_cast<Residue>(acc[j]);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

Vector operator*(const Vector& x, const Matrix& a) {
  require(x.size() == a.rows(), "vector-matrix shape mismatch");
  const PrimeField& f = a.field();
  Vector y(a.cols(), 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    const auto arow = a.row(k);
    for (std::size_t j = 0; j < y.size(); ++j) {
      y[j] = f.add(y[j], f.mul(x[k], arow[j]));
    }
  }
  return y;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vstack column mismatch");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "hstack row mismatch");
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

std::vector<std::size_t> row_reduce(Matrix& a) {
  const PrimeField& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      auto rp = a.row(p);
      auto rr = a.row(r);
      std::swap_ranges(rp.begin(), rp.end(), rr.begin());
    }
    const Residue inv = f.inv(a(r, c));
    for (auto& x : a.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Residue factor = a(i, c);
      auto ri = a.row(i);
      const auto rr = a.row(r);
      for (std::size_t j = c; j < a.cols(); ++j) {
        ri[j] = f.sub(ri[j], f.mul(factor, rr[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix a) { return row_reduce(a).size(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  Matrix r = a;
  const auto pivots = row_reduce(r);
  const PrimeField& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(a.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = f.neg(r(i, free));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix left_kernel(const Matrix& a) {
  return Matrix::from_rows(a.field(), a.rows(), kernel_basis(a.transposed()));
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  require(b.size() == a.rows(), "right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::optional<Vector> solve_left(const Matrix& a, const Vector& b) {
  return solve(a.transposed(), b);
}

Matrix row_space(const Matrix& a) {
  Matrix r = a;
  const auto pivots = row_reduce(r);
  return r.block(0, 0, pivots.size(), a.cols());
}

Residue determinant(Matrix a) {
  require(a.rows() == a.cols(), "determinant of non-square matrix");
  const PrimeField& f = a.field();
  Residue det = 1 % f.order();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      auto rp = a.row(p);
      auto rc = a.row(c);
      std::swap_ranges(rp.begin(), rp.end(), rc.begin());
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Residue inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Residue factor = f.mul(a(i, c), inv);
      for (std::size_t j = c; j < n; ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
      }
    }
  }
  return det;
}

// --- sparse elimination ---------------------------------------------------

SparseSystem::SparseSystem(PrimeField field, std::size_t unknowns)
    : field_(field), unknowns_(unknowns), pivot_row_(unknowns, -1) {}

void SparseSystem::add_equation(std::vector<Term> terms) {
  const PrimeField& f = field_;
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Row row;
  row.reserve(terms.size());
  for (const auto& [col, val] : terms) {
    if (col >= unknowns_) throw DimensionError("unknown index out of range");
    if (!row.empty() && row.back().first == col) {
      row.back().second = f.add(row.back().second, val);
    } else {
      row.emplace_back(col, val);
    }
  }
  std::erase_if(row, [](const Term& t) { return t.second == 0; });

  Row scratch;
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::ptrdiff_t p = pivot_row_[lead];
    if (p < 0) {
      const Residue inv = f.inv(row.front().second);
      for (auto& t : row) t.second = f.mul(t.second, inv);
      pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
      rows_.push_back(std::move(row));
      ++rank_;
      return;
    }
    // row -= row[lead] * pivot, merging sorted term lists
    const Residue factor = row.front().second;
    const Row& pivot = rows_[static_cast<std::size_t>(p)];
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() ||
          (i < row.size() && row[i].first < pivot[j].first)) {
        scratch.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        scratch.emplace_back(pivot[j].first,
                             f.neg(f.mul(factor, pivot[j].second)));
        ++j;
      } else {
        const Residue v =
            f.sub(row[i].second, f.mul(factor, pivot[j].second));
        if (v != 0) scratch.emplace_back(row[i].first, v);
        ++i;
        ++j;
      }
    }
    row.swap(scratch);
  }
}

std::vector<Vector> SparseSystem::kernel_basis() const {
  const PrimeField& f = field_;
  // Back substitution: reduce pivot rows from the highest pivot down so each
  // row ends up with its pivot plus free columns only.
  std::vector<Row> reduced(rows_.size());
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < unknowns_; ++c)
    if (pivot_row_[c] >= 0) pivot_cols.push_back(c);

  for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
    const auto idx = static_cast<std::size_t>(pivot_row_[*it]);
    Row row = rows_[idx];
    Row out;
    out.push_back(row.front());
    std::vector<std::pair<std::size_t, Residue>> acc;  // free col -> value
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto [col, val] = row[k];
      const std::ptrdiff_t p = pivot_row_[col];
      if (p < 0) {
        acc.emplace_back(col, val);
      } else {
        for (std::size_t m = 1; m < reduced[p].size(); ++m) {
          acc.emplace_back(reduced[p][m].first,
                           f.neg(f.mul(val, reduced[p][m].second)));
        }
      }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [col, val] : acc) {
      if (out.size() > 1 && out.back().first == col) {
        out.back().second = f.add(out.back().second, val);
      } else {
        out.emplace_back(col, val);
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    reduced[idx] = std::move(out);
  }

  std::vector<std::ptrdiff_t> free_index(unknowns_, -1);
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (pivot_row_[c] < 0) {
      free_index[c] = static_cast<std::ptrdiff_t>(basis.size());
      Vector x(unknowns_, 0);
      x[c] = 1;
      basis.push_back(std::move(x));
    }
  }
  for (const auto& row : reduced) {
    const std::size_t pivot = row.front().first;
    for (std::size_t m = 1; m < row.size(); ++m) {
      const auto [col, val] = row[m];
      basis[static_cast<std::size_t>(free_index[col])][pivot] = f.neg(val);
    }
  }
  return basis;
}

std::vector<std::size_t> SparseSystem::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < unknowns_; ++c)
    if (pivot_row_[c] < 0) out.push_back(c);
  return out;
}

}  // namespace sba
