#pragma once

// Exact linear algebra over Rational: reduced row echelon bases, rank,
// span membership, and canonical reduction against a row space.

#include <toric/rational.hpp>

#include <cstddef>
#include <vector>

namespace toric {

// Sparse matrix in triplet form: at most one stored entry per position,
// stored entries are nonzero.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Adds value at (row, col); entries at the same position accumulate.
  // Zero results are dropped on densification.
  void add(std::size_t row, std::size_t col, const Rational& value);

  // Stored nonzero count (after coalescing).
  std::size_t nonzeros() const;

  std::vector<Rational> dense_row(std::size_t row) const;
  SparseMatrix transposed() const;

  static SparseMatrix from_dense_rows(const std::vector<std::vector<Rational>>& rows,
                                      std::size_t cols);

 private:
  friend class EchelonBasis;
  std::size_t rows_, cols_;
  // Per-row (col, value) pairs, kept coalesced and zero-free.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> row_entries_;
};

struct ReduceResult {
  std::vector<Rational> residual;
  // Coefficient used on each stored basis row; v = residual + sum c_i row_i.
  std::vector<Rational> coefficients;
  bool in_span() const;
};

// Reduced row echelon basis of a row space: each pivot column holds 1 in its
// own row and 0 in every other stored row; rank == number of stored rows.
class EchelonBasis {
 public:
  EchelonBasis() : cols_(0), track_(false) {}
  explicit EchelonBasis(std::size_t cols, bool track_transform = false);

  // Insert a row (reduces it first; absorbed rows leave the basis unchanged).
  // Returns true when the row increased the rank.
  bool insert(const std::vector<Rational>& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& row_vectors() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  std::vector<std::size_t> non_pivot_columns() const;

  ReduceResult reduce(const std::vector<Rational>& v) const;

  // When transform tracking is enabled at construction: expansion of each
  // stored basis row over the rows originally inserted (by insertion index).
  const std::vector<std::vector<Rational>>& transform() const { return transform_; }
  std::size_t inserted_rows() const { return inserted_; }

 private:
  std::size_t cols_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<Rational>> rows_;     // reduced rows, pivot value 1
  std::vector<std::size_t> pivots_;             // pivot column per stored row
  std::vector<std::vector<Rational>> transform_;
};

EchelonBasis rref(const SparseMatrix& m, bool track_transform = false);

ReduceResult reduce_against(const std::vector<Rational>& v, const EchelonBasis& b);

bool in_span(const std::vector<Rational>& v, const EchelonBasis& b);

}  // namespace toric
