#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbrick/fp.hpp"

namespace qbrick {

/// Dense row-major matrix over F_p.  Sizes at desk scale (total module
/// dimension up to a couple hundred) so plain Gaussian elimination is
/// the workhorse; everything is exact.
class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols, uint64_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static Mat identity(size_t n, uint64_t p) {
    Mat m(n, n, p);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
  }

  /// Build from signed integer rows, reducing mod p.
  static Mat from_rows(std::initializer_list<std::initializer_list<int64_t>> rows,
                       uint64_t p) {
    size_t r = rows.size();
    size_t c = r ? rows.begin()->size() : 0;
    Mat m(r, c, p);
    size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw error("Mat::from_rows: ragged rows");
      size_t j = 0;
      for (int64_t v : row) m.at(i, j++) = fp::reduce_int(v, p);
      ++i;
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint64_t p() const { return p_; }

  uint64_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (uint64_t v : a_)
      if (v) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = fp::add(a_[k], o.a_[k], p_);
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = fp::sub(a_[k], o.a_[k], p_);
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_ || p_ != o.p_)
      throw error("Mat::operator*: shape or modulus mismatch");
    Mat r(rows_, o.cols_, p_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        uint64_t v = at(i, k);
        if (!v) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p_;
      }
    return r;
  }

  Mat scaled(uint64_t c) const {
    Mat r = *this;
    for (auto& v : r.a_) v = fp::mul(v, c, p_);
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, p_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Mat r(nr, nc, p_);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
  }

  static Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.p_ != b.p_) throw error("Mat::hstack: mismatch");
    Mat r(a.rows_, a.cols_ + b.cols_, a.p_);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  static Mat block_diag(const std::vector<Mat>& blocks, uint64_t p) {
    size_t nr = 0, nc = 0;
    for (const Mat& b : blocks) {
      nr += b.rows();
      nc += b.cols();
    }
    Mat r(nr, nc, p);
    size_t ro = 0, co = 0;
    for (const Mat& b : blocks) {
      for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) r.at(ro + i, co + j) = b.at(i, j);
      ro += b.rows();
      co += b.cols();
    }
    return r;
  }

  /// Reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref_in_place() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t piv = row;
      while (piv < rows_ && at(piv, col) == 0) ++piv;
      if (piv == rows_) continue;
      swap_rows(piv, row);
      uint64_t inv = fp::inv(at(row, col), p_);
      for (size_t j = col; j < cols_; ++j) at(row, j) = fp::mul(at(row, j), inv, p_);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        uint64_t f = at(i, col);
        if (!f) continue;
        for (size_t j = col; j < cols_; ++j)
          at(i, j) = fp::sub(at(i, j), fp::mul(f, at(row, j), p_), p_);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Mat m = *this;
    return m.rref_in_place().size();
  }

  /// Basis of the right null space, returned as columns of an
  /// cols x nullity matrix (canonical: free variables set to unit values
  /// in ascending column order).
  Mat kernel() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t nullity = cols_ - pivots.size();
    Mat k(cols_, nullity, p_);
    size_t col = 0;
    for (size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      k.at(free, col) = 1 % p_;
      for (size_t r = 0; r < pivots.size(); ++r)
        k.at(pivots[r], col) = fp::neg(m.at(r, free), p_);
      ++col;
    }
    return k;
  }

  /// Basis of the column space: the columns of *this at the pivot
  /// positions of its rref.
  Mat column_space() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref_in_place();
    Mat b(rows_, pivots.size(), p_);
    for (size_t j = 0; j < pivots.size(); ++j)
      for (size_t i = 0; i < rows_; ++i) b.at(i, j) = at(i, pivots[j]);
    return b;
  }

  /// Solve (*this) X = rhs; nullopt if inconsistent.  Free variables 0.
  std::optional<Mat> solve(const Mat& rhs) const {
    if (rhs.rows_ != rows_ || rhs.p_ != p_) throw error("Mat::solve: mismatch");
    Mat aug = hstack(*this, rhs);
    std::vector<size_t> pivots = aug.rref_in_place();
    for (size_t c : pivots)
      if (c >= cols_) return std::nullopt;
    Mat x(cols_, rhs.cols_, p_);
    for (size_t r = 0; r < pivots.size(); ++r)
      for (size_t j = 0; j < rhs.cols_; ++j)
        x.at(pivots[r], j) = aug.at(r, cols_ + j);
    return x;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug = hstack(*this, identity(rows_, p_));
    std::vector<size_t> pivots = aug.rref_in_place();
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t r = 0; r < rows_; ++r)
      if (pivots[r] != r) return std::nullopt;
    return aug.block(0, cols_, rows_, cols_);
  }

  bool is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
  }

  Mat pow(uint64_t e) const {
    if (rows_ != cols_) throw error("Mat::pow: square matrix required");
    Mat base = *this;
    Mat r = identity(rows_, p_);
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
      throw error("Mat: shape or modulus mismatch");
  }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  size_t rows_ = 0, cols_ = 0;
  uint64_t p_ = 2;
  std::vector<uint64_t> a_;
};

}  // namespace qbrick
