#pragma once

// Dense row-major matrices over GF(q) with the elimination routines the
// rank and corank functions are built on.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/bits.hpp"
#include "posetcode/field.hpp"

namespace posetcode {

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, kZero) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
  }

  // Rows given as integer encodings; every row must have the same length.
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = field->elem(rows[r][c]);
    }
    return m;
  }

  static Matrix identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
    return m;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(Mask columns) const {
    check_columns(columns);
    Matrix s(field_, rows_, static_cast<std::size_t>(popcount(columns)));
    std::size_t out = 0;
    for_each_bit(columns, [&](std::size_t c) {
      for (std::size_t r = 0; r < rows_; ++r) s(r, out) = (*this)(r, c);
      ++out;
    });
    return s;
  }

  Matrix select_rows(std::span<const std::size_t> which) const {
    Matrix s(field_, which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
      if (which[i] >= rows_) throw std::out_of_range("row index out of range");
      std::copy_n(row(which[i]).begin(), cols_, s.row(i).begin());
    }
    return s;
  }

  void append_row(std::span<const Elem> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix operator*(const Matrix& o) const {
    if (*field_ != *o.field_) throw std::invalid_argument("matrices over different fields");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    const Field& f = *field_;
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const Elem a = (*this)(i, l);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, o(l, j)));
      }
    return out;
  }

  bool operator==(const Matrix& o) const {
    return *field_ == *o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  void check_columns(Mask columns) const {
    if (cols_ < 32 && (columns & ~full_mask(cols_)) != 0)
      throw std::out_of_range("column set " + mask_to_string(columns) + " exceeds " + std::to_string(cols_) +
                              " columns");
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination: pivots are taken left to right, and the pivot row
// is the first row at or below the current one with a nonzero entry.
inline RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = *a.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t r = lead;
    while (r < a.rows() && a(r, c).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != lead) std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(lead).begin());
    const Elem scale = f.inv(a(lead, c));
    for (auto& e : a.row(lead)) e = f.mul(e, scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      const Elem factor = a(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(lead, j)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

// Forward elimination only; the rank is all we need from it.
inline std::size_t rank(const Matrix& m) {
  Matrix a = m;
  const Field& f = *a.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t r = lead;
    while (r < a.rows() && a(r, c).is_zero()) ++r;
    if (r == a.rows()) continue;
    if (r != lead) std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(lead).begin());
    const Elem scale = f.inv(a(lead, c));
    for (std::size_t i = lead + 1; i < a.rows(); ++i) {
      const Elem factor = f.mul(a(i, c), scale);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(lead, j)));
    }
    ++lead;
  }
  return lead;
}

inline std::size_t column_submatrix_rank(const Matrix& m, Mask columns) {
  m.check_columns(columns);
  if (columns == 0) return 0;
  return rank(m.select_columns(columns));
}

// Basis of {x : m x^T = 0}, one row per free column of rref(m), in column order.
inline Matrix null_space_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const Field& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(m.field(), 0, m.cols());
  std::vector<Elem> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), kZero);
    v[free] = kOne;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(reduced(i, free));
    basis.append_row(v);
  }
  return basis;
}

}  // namespace posetcode
