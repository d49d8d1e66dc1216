#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <toric/linalg.hpp>

#include <random>
#include <vector>

using namespace toric;

namespace {

std::vector<Rational> row(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

EchelonBasis basis_of(const std::vector<std::vector<Rational>>& rows, std::size_t cols,
                      bool track = false) {
  EchelonBasis basis(cols, track);
  for (const auto& r : rows) basis.insert(r);
  return basis;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  return basis_of(rows, cols).rank();
}

}  // namespace

TEST_CASE("rank fixtures") {
  CHECK(rank_of({row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}, 3) == 3);
  CHECK(rank_of({row({0, 0}), row({0, 0})}, 2) == 0);
  const EchelonBasis proportional = basis_of({row({1, 2}), row({2, 4})}, 2);
  CHECK(proportional.rank() == 1);
  REQUIRE(proportional.pivot_columns().size() == 1);
  CHECK(proportional.pivot_columns()[0] == 0);
}

TEST_CASE("reduce against a basis") {
  const std::vector<std::vector<Rational>> rows = {row({1, 2, 0}), row({0, 0, 3})};
  const EchelonBasis basis = basis_of(rows, 3);
  REQUIRE(basis.rank() == 2);

  SUBCASE("a stored row reduces to zero") {
    const ReduceResult r = basis.reduce(basis.row_vectors()[0]);
    CHECK(r.in_span());
    CHECK(r.coefficients[0] == 1);
    CHECK(r.coefficients[1] == 0);
  }

  SUBCASE("vector supported off the pivots is untouched") {
    // Pivots are columns 0 and 2; a pure column-1 vector has no pivot to hit.
    const std::vector<Rational> v = row({0, 5, 0});
    const ReduceResult r = basis.reduce(v);
    CHECK_FALSE(r.in_span());
    CHECK(r.residual == v);
  }

  SUBCASE("exact combination is recovered") {
    std::vector<Rational> v(3, Rational(0));
    for (std::size_t j = 0; j < 3; ++j) {
      v[j] = Rational(2) * rows[0][j] + Rational(3) * rows[1][j];
    }
    const ReduceResult r = basis.reduce(v);
    CHECK(r.in_span());
    // Coefficients are reported against the stored (pivot-normalized) rows;
    // recombining them must reproduce v exactly.
    REQUIRE(r.coefficients.size() == basis.rank());
    std::vector<Rational> rebuilt(3, Rational(0));
    for (std::size_t i = 0; i < basis.rank(); ++i)
      for (std::size_t j = 0; j < 3; ++j)
        rebuilt[j] += r.coefficients[i] * basis.row_vectors()[i][j];
    CHECK(rebuilt == v);
  }
}

TEST_CASE("span membership") {
  const EchelonBasis empty(4);
  CHECK_FALSE(empty.reduce(row({0, 1, 0, 0})).in_span());

  const EchelonBasis basis = basis_of({row({1, 1}), row({0, 1})}, 2);
  CHECK(basis.reduce(row({7, -3})).in_span());  // full rank in dimension 2
}

TEST_CASE("reinserting reduced rows changes nothing") {
  std::mt19937 rng(5);
  EchelonBasis basis(6);
  for (int i = 0; i < 8; ++i) {
    std::vector<Rational> r(6);
    for (auto& c : r) c = Rational(static_cast<long>(rng() % 7) - 3);
    basis.insert(r);
  }
  const auto rows_before = basis.row_vectors();
  const auto pivots_before = basis.pivot_columns();
  for (const auto& r : rows_before) CHECK_FALSE(basis.insert(r));
  CHECK(basis.row_vectors() == rows_before);
  CHECK(basis.pivot_columns() == pivots_before);
}

TEST_CASE("row rank equals column rank on random sparse matrices") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix m(10, 10);
    for (int e = 0; e < 25; ++e) {
      m.add(rng() % 10, rng() % 10, Rational(static_cast<long>(rng() % 7) - 3));
    }
    const SparseMatrix mt = m.transposed();
    EchelonBasis rows_basis(10), cols_basis(10);
    for (std::size_t i = 0; i < 10; ++i) {
      rows_basis.insert(m.dense_row(i));
      cols_basis.insert(mt.dense_row(i));
    }
    CHECK(rows_basis.rank() == cols_basis.rank());
  }
}

TEST_CASE("random combinations lie in the span, perturbations do not") {
  std::mt19937 rng(17);
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> r(8);
    for (auto& c : r) c = Rational(static_cast<long>(rng() % 9) - 4);
    rows.push_back(r);
  }
  const EchelonBasis basis = basis_of(rows, 8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v(8, Rational(0));
    for (const auto& r : rows) {
      const Rational c = Rational(static_cast<long>(rng() % 11) - 5) / (1 + rng() % 4);
      for (std::size_t j = 0; j < 8; ++j) v[j] += c * r[j];
    }
    CHECK(basis.reduce(v).in_span());
    // Bump a coordinate outside the pivot structure: leaves the span.
    const auto non_pivots = basis.non_pivot_columns();
    if (!non_pivots.empty()) {
      v[non_pivots[trial % non_pivots.size()]] += 1;
      CHECK_FALSE(basis.reduce(v).in_span());
    }
  }
}

TEST_CASE("transform tracking expands stored rows over all insertions") {
  // Includes absorbed (rank-preserving) inserts between rank-increasing ones:
  // every stored expansion must still be indexed over the full insertion
  // history.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Rational>> inserted;
    EchelonBasis basis(5, /*track_transform=*/true);
    for (int i = 0; i < 12; ++i) {
      std::vector<Rational> r(5);
      if (i % 3 == 2 && !inserted.empty()) {
        // Deliberately dependent row: a scalar multiple of an earlier one.
        r = inserted[rng() % inserted.size()];
        const Rational c = Rational(static_cast<long>(rng() % 5) - 2);
        for (auto& x : r) x *= c;
      } else {
        for (auto& c : r) c = Rational(static_cast<long>(rng() % 7) - 3);
      }
      inserted.push_back(r);
      basis.insert(r);
    }
    REQUIRE(basis.inserted_rows() == inserted.size());
    const auto& transform = basis.transform();
    REQUIRE(transform.size() == basis.rank());
    for (std::size_t i = 0; i < basis.rank(); ++i) {
      REQUIRE(transform[i].size() == inserted.size());
      std::vector<Rational> recombined(5, Rational(0));
      for (std::size_t j = 0; j < inserted.size(); ++j) {
        for (std::size_t c = 0; c < 5; ++c) {
          recombined[c] += transform[i][j] * inserted[j][c];
        }
      }
      CHECK(recombined == basis.row_vectors()[i]);
    }
  }
}
