#include <toric/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace toric {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_entries_(rows) {}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::add: index out of range");
  if (value == 0) return;
  auto& entries = row_entries_[row];
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != entries.end() && it->first == col) {
    it->second += value;
    if (it->second == 0) entries.erase(it);
  } else {
    entries.insert(it, {col, value});
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& entries : row_entries_) n += entries.size();
  return n;
}

std::vector<Rational> SparseMatrix::dense_row(std::size_t row) const {
  if (row >= rows_) throw std::out_of_range("SparseMatrix::dense_row: index out of range");
  std::vector<Rational> out(cols_, Rational(0));
  for (const auto& [col, value] : row_entries_[row]) out[col] = value;
  return out;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [col, value] : row_entries_[r]) out.add(col, r, value);
  }
  return out;
}

SparseMatrix SparseMatrix::from_dense_rows(const std::vector<std::vector<Rational>>& rows,
                                           std::size_t cols) {
  SparseMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_dense_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) out.add(r, c, rows[r][c]);
  }
  return out;
}

bool ReduceResult::in_span() const {
  for (const auto& x : residual) {
    if (x != 0) return false;
  }
  return true;
}

EchelonBasis::EchelonBasis(std::size_t cols, bool track_transform)
    : cols_(cols), track_(track_transform) {}

bool EchelonBasis::insert(const std::vector<Rational>& row) {
  if (row.size() != cols_) throw std::invalid_argument("EchelonBasis::insert: dimension mismatch");
  std::vector<Rational> work = row;
  std::vector<Rational> combo;  // expansion of `work` over inserted rows
  if (track_) {
    combo.assign(inserted_ + 1, Rational(0));
    combo[inserted_] = Rational(1);
  }
  ++inserted_;

  // Reduce against existing rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = work[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[i][c] != 0) work[c] -= factor * rows_[i][c];
    }
    if (track_) {
      for (std::size_t j = 0; j < transform_[i].size(); ++j) {
        combo[j] -= factor * transform_[i][j];
      }
    }
  }

  // Every stored expansion stays indexed over the full insertion history.
  if (track_) {
    for (auto& t : transform_) t.resize(inserted_, Rational(0));
  }

  // Find the leftmost nonzero to become the pivot.
  std::size_t pivot = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (work[c] != 0) {
      pivot = c;
      break;
    }
  }
  if (pivot == cols_) return false;  // absorbed

  const Rational scale = work[pivot];
  for (auto& x : work) x /= scale;
  if (track_) {
    for (auto& x : combo) x /= scale;
    combo.resize(inserted_, Rational(0));
  }

  // Clear the new pivot column from existing rows to stay fully reduced.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = rows_[i][pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (work[c] != 0) rows_[i][c] -= factor * work[c];
    }
    if (track_) {
      for (std::size_t j = 0; j < combo.size(); ++j) {
        transform_[i][j] -= factor * combo[j];
      }
    }
  }

  // Keep rows ordered by pivot column.
  std::size_t position = rows_.size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (pivots_[i] > pivot) {
      position = i;
      break;
    }
  }
  rows_.insert(rows_.begin() + position, std::move(work));
  pivots_.insert(pivots_.begin() + position, pivot);
  if (track_) transform_.insert(transform_.begin() + position, std::move(combo));
  return true;
}

std::vector<std::size_t> EchelonBasis::non_pivot_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

ReduceResult EchelonBasis::reduce(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("EchelonBasis::reduce: dimension mismatch");
  ReduceResult result;
  result.residual = v;
  result.coefficients.assign(rows_.size(), Rational(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = result.residual[pivots_[i]];
    if (factor == 0) continue;
    result.coefficients[i] = factor;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[i][c] != 0) result.residual[c] -= factor * rows_[i][c];
    }
  }
  return result;
}

EchelonBasis rref(const SparseMatrix& m, bool track_transform) {
  EchelonBasis basis(m.cols(), track_transform);
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.dense_row(r));
  return basis;
}

ReduceResult reduce_against(const std::vector<Rational>& v, const EchelonBasis& b) {
  return b.reduce(v);
}

bool in_span(const std::vector<Rational>& v, const EchelonBasis& b) {
  return b.reduce(v).in_span();
}

}  // namespace toric
