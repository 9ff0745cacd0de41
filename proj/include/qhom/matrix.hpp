#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

/// Dense matrix over an exact field, row-major. All operations are exact;
/// rank decisions are never approximate.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}

  Matrix(int rows, int cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field),
        entries_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

  static Matrix identity(int n, FieldSpec field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          FieldSpec field) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c, field);
    for (int i = 0; i < r; ++i) {
      assert(static_cast<int>(rows[i].size()) == c);
      for (int j = 0; j < c; ++j) m.at(i, j) = field.normalize(rows[i][j]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  const Scalar& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  void set(int i, int j, const Scalar& v) { at(i, j) = field_.normalize(v); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!field_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Scalar& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = field_.add(entries_[i], o.entries_[i]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = field_.sub(entries_[i], o.entries_[i]);
    return r;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = field_.mul(entries_[i], c);
    return r;
  }

  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const {
    assert(rows_ == o.rows_);
    Matrix r(rows_, cols_ + o.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  /// Vertical concatenation [this ; o].
  Matrix vcat(const Matrix& o) const {
    assert(cols_ == o.cols_);
    Matrix r(rows_ + o.rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
  }

  Matrix columns(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()), field_);
    for (int i = 0; i < rows_; ++i)
      for (size_t j = 0; j < idx.size(); ++j) r.at(i, (int)j) = at(i, idx[j]);
    return r;
  }

  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix r(nr, nc, field_);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
  }

  std::vector<Scalar> col(int j) const {
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  /// Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!field_.is_zero(at(i, c))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Scalar piv_inv = field_.inv(at(r, c));
      for (int j = c; j < cols_; ++j)
        at(r, j) = field_.mul(at(r, j), piv_inv);
      for (int i = 0; i < rows_; ++i) {
        if (i == r || field_.is_zero(at(i, c))) continue;
        Scalar f = at(i, c);
        for (int j = c; j < cols_; ++j)
          at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Matrix copy = *this;
    return static_cast<int>(copy.rref().size());
  }

  /// Columns span the null space; column count = cols - rank.
  Matrix kernel_basis() const {
    Matrix R = *this;
    std::vector<int> pivots = R.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Matrix K(cols_, static_cast<int>(free_cols.size()), field_);
    for (size_t k = 0; k < free_cols.size(); ++k) {
      int fc = free_cols[k];
      K.at(fc, (int)k) = 1;
      for (size_t r = 0; r < pivots.size(); ++r)
        K.at(pivots[r], (int)k) = field_.neg(R.at((int)r, fc));
    }
    return K;
  }

  /// Solves this * x = b for all columns of b; absent when inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    if (b.rows() != rows_)
      throw std::invalid_argument("solve: row count mismatch");
    Matrix aug = hcat(b);
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
      if (p >= cols_) return std::nullopt;
    Matrix x(cols_, b.cols(), field_);
    for (size_t r = 0; r < pivots.size(); ++r)
      for (int j = 0; j < b.cols(); ++j)
        x.at(pivots[r], j) = aug.at((int)r, cols_ + j);
    return x;
  }

  /// Column space basis: the subset of columns at pivot positions.
  Matrix column_space_basis() const {
    Matrix R = *this;
    std::vector<int> pivots = R.rref();
    return columns(pivots);
  }

  std::vector<Scalar>& data() { return entries_; }
  const std::vector<Scalar>& data() const { return entries_; }

private:
  int rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

inline Matrix from_column(const std::vector<Scalar>& v, FieldSpec field) {
  Matrix m(static_cast<int>(v.size()), 1, field);
  for (size_t i = 0; i < v.size(); ++i) m.at((int)i, 0) = field.normalize(v[i]);
  return m;
}

/// Extends the column span of B to the full space by standard basis vectors;
/// returns the indices of the standard vectors used.
inline std::vector<int> complement_of_column_span(const Matrix& B) {
  const FieldSpec& f = B.field();
  Matrix work = B;
  std::vector<int> chosen;
  int rank = B.rank();
  for (int i = 0; i < B.rows() && rank < B.rows(); ++i) {
    Matrix e(B.rows(), 1, f);
    e.at(i, 0) = 1;
    Matrix cand = work.hcat(e);
    int r = cand.rank();
    if (r > rank) {
      chosen.push_back(i);
      work = cand;
      rank = r;
    }
  }
  return chosen;
}

}  // namespace qhom
