#pragma once

// End-to-end verification harness: dimension and eta-product oracles,
// span ranks of the pair products, exact membership checks behind the
// cusp-form, relation-image, derivative, and Hecke-equivariance statements,
// and the symbolic oddness fit for the symbol-valued divisor sums.

#include <toric/linalg.hpp>
#include <toric/manin.hpp>
#include <toric/qseries.hpp>
#include <toric/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace toric {

// Dimensions of the weight-k form and cusp-form spaces at level l (l >= 5:
// no elliptic points, all cusps regular).
struct Dims {
  long dim_M;
  long dim_S;
  long genus;
  long cusps;
  long index;  // index of the level subgroup in the full modular group
};

Dims dims(int l, int k);

// Index of the level subgroup: l^2 * prod_{p | l} (1 - 1/p^2).
long group_index(int l);

// Coefficient count certifying equality of weight-k forms at level l:
// ceil(k * index / 12).
int sturm_bound(int l, int k);

// q^{sum d*e/24} * prod_d prod_{n>=1} (1 - q^{d n})^{e}, exact to order N.
// The leading exponent must be a nonnegative integer and the total weight
// sum(e)/2 integral.
QSeries eta_product(const std::vector<std::pair<long, long>>& factors, int N);

// The designated cusp-form oracle at the supported (level, weight) points.
QSeries newform_oracle(int l, int k, int N);

struct SpanReport {
  int level;
  int weight;
  int truncation;
  std::vector<std::string> labels;
  std::size_t rank;
  long dim_M;
  long dim_S;
  bool bounds_ok;  // dim_S <= rank <= dim_M
  bool stable;     // rank unchanged with 10 extra coefficients
};

// Rank of the non-quasimodular pair products as series to order N
// (N at least the coefficient bound), with oracle bounds.
SpanReport pair_span_report(int l, int k, int N);

struct MembershipResult {
  bool member;
  // Exact combination over pair labels reproducing every coefficient.
  std::vector<std::pair<std::string, Rational>> combination;
};

// Exact membership of a cusp form in the pair-product row space to order N.
MembershipResult check_newform_membership(int l, int k, const QSeries& newform, int N);

// Echelon basis of span{ weight-k singles (all residues),
//                        D(weight-(k-2) singles) (all residues) } to order N.
EchelonBasis eis_deriv_subspace(int l, int k, int N);

// Every D(weight-(k-2) single) lies in the quasimodular pair span.
bool check_derivs_in_pairs(int l, int k, int N);

// Series image of one three-term relation instance lies in the
// singles-plus-derivatives subspace.
bool check_mumap_relation(int l, int k, int a, int b, int r, int s, int N);

// All relation instances at (l, k).
bool check_mumap_all(int l, int k, int N);

// mu(T_p w) - T_p(mu(relabel_{1/p} w)) lies in the singles-plus-derivatives
// subspace; input truncation N >= p * (sturm_bound + 10).
bool check_hecke_equivariance(int l, int k, long p, const SymbolVector& w, int N);

// Quotient coordinates of m -> R+_{(m,0)} + 2 sum_{0<j<m} R+_{(m,j)} extend to
// odd residue-wise polynomials of degree <= k; fitted on the first k+1 samples
// per residue class and verified on all of 1..M_max.
bool check_oddprop_symbolic(int l, int k, int M_max);

// First-approximation identity at one D, in the symbol quotient.
bool check_firstapprox(int l, int k, long D);

// Boundary-segment multiset over all index-p sublattices equals the
// determinant-p quadruple set.
bool check_abcd(long p);

// Threads partition I(D) with the correct endpoints and inverse moves.
bool check_threads_partition(long D);

// Deterministic pseudo-random symbol vectors with small integer coordinates.
std::vector<SymbolVector> random_symbol_vectors(const SymbolSpace& space,
                                                std::size_t count, unsigned seed);

// Hecke operators commute with each other (T_2 T_3 = T_6 = T_3 T_2) and with
// symmetrization, on `count` seeded random vectors, in the symbol quotient.
bool check_hecke_commutation(int l, int k, std::size_t count, unsigned seed);

// Seeded random even two-variable inputs (modulus <= 6, branch degree <= 4,
// N <= 3): the closed-form cone sum is symbolically odd and matches direct
// summation at every d = 1..40.
bool check_conesum_random(std::size_t count, unsigned seed);

// Seeded random odd one-variable inputs round-trip: the signed-power-basis
// decomposition reproduces the function exactly, and the rebuilt
// generator-series combination matches the divisor-sum series to the given
// order.
bool check_odd_roundtrip(std::size_t count, unsigned seed, int order);

// The signed cancellation count vanishes for every admissible quadruple of
// every index-p sublattice, all weight splits r + s = k - 2, all unimodular
// label pairs (u, v), and all degrees D <= D_max.
bool check_inside_zero(int l, int k, long p, long D_max);

}  // namespace toric
