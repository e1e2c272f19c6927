#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/format.hpp"
#include "mzlab/scalar.hpp"

namespace mzlab {

using Vector = std::vector<Scalar>;

/// Dense matrix over Q or F_p, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(Field field, const std::vector<std::vector<long>>& rows) {
    Matrix m(field, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = field(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Matrix& operator+=(const Matrix& o) {
    require_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }
  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw InputError("matrix-vector shape mismatch");
    Vector out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix pow(std::size_t k) const {
    require_square();
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (k != 0) {
      if (k & 1U) acc = acc * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return acc;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Reduced row echelon form and the pivot columns.
  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix r = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && r(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      r.swap_rows(sel, row);
      const Scalar inv = r(row, col).inverse();
      for (std::size_t j = col; j < cols_; ++j) r(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || r(i, col).is_zero()) continue;
        const Scalar f = r(i, col);
        for (std::size_t j = col; j < cols_; ++j) r(i, j) -= f * r(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(r), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  /// Basis of the right null space {v : A v = 0}.
  std::vector<Vector> kernel() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vector v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Some solution of A x = b, or nullopt when inconsistent.
  std::optional<Vector> solve(const Vector& b) const {
    if (b.size() != rows_) throw InputError("right-hand side length mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto [r, pivots] = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vector x(cols_, field_.zero());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, cols_);
    return x;
  }

  Matrix inverse() const {
    require_square();
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = field_.one();
    }
    auto [r, pivots] = aug.rref();
    if (pivots.size() < rows_ || pivots[rows_ - 1] != rows_ - 1) throw InputError("matrix is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = r(i, cols_ + j);
    }
    return inv;
  }

  /// One row per line, entries separated by single spaces.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != 0) s += " ";
        s += (*this)(i, j).to_string();
      }
      s += "\n";
    }
    return s;
  }

  /// `[[a,b],[c,d]]`
  std::string to_inline_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : ",[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != 0) s += ",";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

  void require_square() const {
    if (!is_square()) throw InputError("square matrix required");
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void require_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw InputError("matrix shape mismatch");
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Incremental echelon basis of sparse vectors indexed by monomials.
///
/// Every stored row remembers how it was assembled from the vectors passed to
/// insert(), so reduce() can report coordinates with respect to those original
/// vectors rather than the echelon rows.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field field) : field_(field) {}

  struct Reduction {
    TermMap remainder;
    Vector coords;  // over the inserted originals, in insertion order
  };

  std::size_t dimension() const noexcept { return originals_; }

  Reduction reduce(TermMap v) const {
    Vector coords(originals_, field_.zero());
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Scalar c = it->second;
      for (const auto& [a, x] : row.vec) {
        auto [jt, inserted] = v.try_emplace(a, -(c * x));
        if (!inserted) {
          jt->second -= c * x;
          if (jt->second.is_zero()) v.erase(jt);
        }
      }
      for (std::size_t k = 0; k < row.combo.size(); ++k) coords[k] += c * row.combo[k];
    }
    return {std::move(v), std::move(coords)};
  }

  bool contains(const TermMap& v) const { return reduce(v).remainder.empty(); }

  /// Adds v; returns false (and leaves the basis unchanged) when v is
  /// already in the span.
  bool insert(const TermMap& v) {
    Reduction r = reduce(v);
    if (r.remainder.empty()) return false;
    const auto pivot = r.remainder.rbegin()->first;
    const Scalar lead_inv = r.remainder.rbegin()->second.inverse();
    Row row;
    for (auto& [a, x] : r.remainder) row.vec.emplace(a, x * lead_inv);
    row.combo.assign(originals_ + 1, field_.zero());
    for (std::size_t k = 0; k < originals_; ++k) row.combo[k] = -(r.coords[k] * lead_inv);
    row.combo[originals_] = lead_inv;
    ++originals_;
    for (auto& [p, other] : rows_) other.combo.resize(originals_, field_.zero());
    rows_.emplace(pivot, std::move(row));
    return true;
  }

 private:
  struct Row {
    TermMap vec;
    Vector combo;
  };

  Field field_;
  std::size_t originals_ = 0;
  std::map<MultiIndex, Row, std::greater<>> rows_;
};

}  // namespace mzlab
