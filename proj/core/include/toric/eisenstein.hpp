#pragma once

// The Eisenstein-type generator family: level-l weight-k series indexed by a
// residue a, the classical level-one series E_k, the prime-to-l relabeling
// action, the product catalog ("pairs"), and the Hecke action on
// q-expansions.

#include <toric/qseries.hpp>
#include <toric/rational.hpp>

#include <string>
#include <vector>

namespace toric {

struct EisLabel {
  int l;  // level
  int a;  // residue, normalized to 0 <= a < l
  int k;  // weight, >= 1

  // The (a = 0 mod l, k = 2) generator is the only non-modular one
  // (E_2-type); everything else is a genuine weight-k form.
  bool quasimodular() const { return a % l == 0 && k == 2; }

  friend bool operator==(const EisLabel&, const EisLabel&) = default;
};

EisLabel make_eis_label(int l, int a, int k);

// Constant term of the weight-k generator. For k >= 2 this is the unique
// value making the completed series modular:
//   -l^(k-1) * (B_k({a/l}) + (-1)^k B_k({-a/l})) / (2k).
// For k = 1 it is 1/2 - a/l (0 < a < l); the a = 0, k = 1 series is zero.
Rational tilde_constant(int l, int a, int k);

// q-expansion of the generator to order N: constant term as above and, for
// n >= 1, coefficient sum over divisors d of n of
//   d^(k-1) * (ind[d = a mod l] + (-1)^k ind[d = -a mod l])      (k >= 2)
//   ind[d = a mod l] - ind[d = -a mod l]                          (k = 1).
QSeries tilde_s(int l, int a, int k, int N);

// Classical level-one series: -B_k/(2k) + sum sigma_{k-1}(n) q^n, k even.
QSeries eis_k(int k, int N);

// Relabel a -> p^{-1} a (mod l); requires gcd(p, l) = 1.
EisLabel diamond_relabel(long p, const EisLabel& label);

// A catalog entry: either one generator of full weight k, or a product of
// two generators with weights summing to k.
struct PairLabel {
  std::vector<EisLabel> factors;  // size 1 or 2

  int total_weight() const;
  bool quasimodular() const;  // true iff some factor is E_2-type
  std::string to_string() const;

  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

PairLabel diamond_relabel(long p, const PairLabel& label);

QSeries pair_series(const PairLabel& label, int N);

// All weight-k catalog entries at level l: singles (a = 0..l-1) followed by
// products for each weight split (m, k-m), m = 1..k-1, factors a, b = 0..l-1.
// When include_quasimodular is false, entries with an E_2-type factor are
// omitted. Deterministic order.
std::vector<std::pair<PairLabel, QSeries>> pair_basis(int l, int k, int N,
                                                      bool include_quasimodular);

// Hecke operator at prime p on a weight-k expansion:
//   a_n(out) = a_{p n}(f) + p^{k-1} a_{n/p}(f_diamond),
// the second term only when p | n. The caller supplies f_diamond, the
// relabeled companion of f (for level-one forms, f itself). Both inputs must
// carry at least p * N_out coefficients.
QSeries hecke_tp_on_form(const QSeries& f, const QSeries& f_diamond, int k, long p, int N_out);

}  // namespace toric
