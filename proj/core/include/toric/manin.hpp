#pragma once

// Weight-k symbol space at level l: formal sums of monomial symbols
// x^i y^{k-2-i} (u, v) over unimodular pairs (u, v) mod l, modulo the
// two-term and three-term relation families; involution, symmetrization,
// the (m,n)-indexed polynomial symbols, Hecke operators via the Merel
// matrix sets, the prime relabeling action, and the symbols-to-series map.

#include <toric/linalg.hpp>
#include <toric/qseries.hpp>
#include <toric/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

class SymbolSpace {
 public:
  // Builds generators and the echelonized relation space.
  SymbolSpace(int l, int k);

  int level() const { return l_; }
  int weight() const { return k_; }

  struct Generator {
    int x_power;  // monomial x^{x_power} y^{k-2-x_power}
    int u;
    int v;
  };

  std::size_t num_generators() const { return generators_.size(); }
  const Generator& generator(std::size_t index) const { return generators_[index]; }

  // Index of the monomial symbol, or nullopt when gcd(u, v, l) > 1 (such
  // symbols are identically zero and carry no coordinate).
  std::optional<std::size_t> generator_index(int x_power, long u, long v) const;

  const EchelonBasis& relation_basis() const { return relations_; }
  std::size_t relation_rank() const { return relations_.rank(); }
  std::size_t quotient_dim() const { return num_generators() - relations_.rank(); }

  // Canonical representative: residual against the relation row space.
  std::vector<Rational> reduce(const std::vector<Rational>& raw) const;

  // Canonical representative compressed to the non-pivot coordinates
  // (a vector of length quotient_dim()).
  std::vector<Rational> quotient_coordinates(const std::vector<Rational>& raw) const;

 private:
  int l_, k_;
  std::vector<Generator> generators_;
  std::vector<std::vector<int>> pair_index_;  // [u][v] -> pair slot or -1
  std::size_t num_pairs_ = 0;
  EchelonBasis relations_;
};

// A symbol-space element: raw coordinates over the generators plus the
// canonical reduced representative.
class SymbolVector {
 public:
  SymbolVector(const SymbolSpace& space, std::vector<Rational> raw);
  static SymbolVector zero(const SymbolSpace& space);

  const SymbolSpace& space() const { return *space_; }
  const std::vector<Rational>& raw() const { return raw_; }
  const std::vector<Rational>& reduced() const { return reduced_; }

  bool is_zero_in_quotient() const;
  bool equal_in_quotient(const SymbolVector& other) const;

  SymbolVector operator+(const SymbolVector& other) const;
  SymbolVector operator-(const SymbolVector& other) const;
  SymbolVector operator*(const Rational& scalar) const;

 private:
  const SymbolSpace* space_;
  std::vector<Rational> raw_;
  std::vector<Rational> reduced_;
};

// Single monomial symbol as a vector (zero if the pair is degenerate).
SymbolVector monomial_symbol(const SymbolSpace& space, int x_power, long u, long v,
                             const Rational& coefficient = Rational(1));

// Involution: x^r y^s (u, v) -> (-1)^r x^r y^s (-u, v).
SymbolVector iota(const SymbolVector& v);

enum class SymmetrizationSign { plus, minus };

// (v + iota(v))/2 or (v - iota(v))/2.
SymbolVector symmetrize(const SymbolVector& v, SymmetrizationSign sign);

// Polynomial symbol indexed by integers (m, n): the binomial expansion of
// (m x + n y)^{k-2} placed at the residue pair (m mod l, n mod l); the zero
// vector when gcd(m, n, l) > 1. The integers themselves (not their residues)
// enter the polynomial part. Optional symmetrization.
SymbolVector r_symbol(const SymbolSpace& space, long m, long n,
                      std::optional<SymmetrizationSign> sign = std::nullopt);

// Hecke operator T_n via the matrix set {(a,b,c,d): a > b >= 0, d > c >= 0,
// ad - bc = n}: sum of (a x + b y)^r (c x + d y)^s (a u + c v, b u + d v)
// over the set, degenerate images dropped.
SymbolVector hecke_tn(const SymbolVector& v, long n);

// Relabeling action (u, v) -> (p u, p v) mod l; requires gcd(p, l) = 1.
SymbolVector epsilon_diamond(const SymbolVector& v, long p);

// Series image of one monomial symbol:
//   x^r y^s (m, n) -> (-1)^s * s~(weight s+1, residue m) * s~(weight r+1, residue n),
// truncated at N. Zero series for degenerate (m, n).
QSeries mu_image(int l, int r_exp, int s_exp, long m, long n, int N);

// Linear extension over the raw generator coordinates (the map is defined on
// generators, not on quotient classes).
QSeries mu_image(const SymbolVector& v, int N);

}  // namespace toric
