#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

// Dense matrix over Rational. Semantics are always dense; no tolerance
// anywhere, every rank and containment answer is exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static ExactMatrix from_rows(std::vector<std::vector<Rational>> rows) {
    ExactMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& row : rows) {
      if (row.size() != m.cols_) {
        throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
      }
      for (auto& v : row) m.data_.push_back(std::move(v));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const {
    return {data_.begin() + static_cast<long>(r * cols_),
            data_.begin() + static_cast<long>((r + 1) * cols_)};
  }

  bool operator==(const ExactMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Incrementally maintained reduced row-echelon basis of a row space.
// The reduced form of a span is unique, so the state after any sequence
// of inserts depends only on the span of what was fed in, never on the
// order. That makes ranks, containment answers and stored bases
// deterministic and safe to compare across runs.
class RowSpaceBuilder {
 public:
  explicit RowSpaceBuilder(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

  // Inserts the row's residue after reduction; returns true if the rank grew.
  bool insert(std::vector<Rational> row) {
    if (row.size() != cols_) {
      throw std::invalid_argument("RowSpaceBuilder::insert: column count mismatch");
    }
    const std::size_t pivot = reduce(row);
    if (pivot == cols_) return false;
    const Rational inv = Rational(1) / row[pivot];
    for (auto& v : row) v *= inv;
    // Clear the new pivot column from the existing rows to stay reduced.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = rows_[k][pivot];
      if (f == 0) continue;
      for (std::size_t c = pivot; c < cols_; ++c) rows_[k][c] -= f * row[c];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), pivot);
    return true;
  }

  bool contains(std::vector<Rational> row) const {
    if (row.size() != cols_) {
      throw std::invalid_argument("RowSpaceBuilder::contains: column count mismatch");
    }
    return reduce(row) == cols_;
  }

  const std::vector<std::vector<Rational>>& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  ExactMatrix matrix() const {
    ExactMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = rows_[r][c];
    }
    return m;
  }

 private:
  // Reduces in place against the current basis; returns the pivot column
  // of the residue, or cols_ if it vanished.
  std::size_t reduce(std::vector<Rational>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = row[pivots_[k]];
      if (f == 0) continue;
      const auto& basis = rows_[k];
      for (std::size_t c = pivots_[k]; c < cols_; ++c) row[c] -= f * basis[c];
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c] != 0) return c;
    }
    return cols_;
  }

  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const ExactMatrix& m) {
  RowSpaceBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.insert(m.row(r));
  return builder.rank();
}

// True iff every row of b lies in the row space of a. Equivalent to
// rank(a) == rank(a stacked with b).
inline bool row_space_contains(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("row_space_contains: column count mismatch");
  }
  RowSpaceBuilder builder(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) builder.insert(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (!builder.contains(b.row(r))) return false;
  }
  return true;
}

inline ExactMatrix stack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("stack: column count mismatch");
  }
  ExactMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  }
  return m;
}

// Rows spanning the (right) kernel {v : m v = 0}, built from the reduced
// echelon form in the standard free-column way, then re-reduced so the
// output is itself a canonical reduced basis.
inline ExactMatrix kernel_basis(const ExactMatrix& m) {
  RowSpaceBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.insert(m.row(r));
  const auto& rows = builder.basis_rows();
  const auto& pivots = builder.pivot_columns();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  RowSpaceBuilder out(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) v[pivots[k]] = -rows[k][f];
    out.insert(std::move(v));
  }
  return out.matrix();
}

}  // namespace sympow
