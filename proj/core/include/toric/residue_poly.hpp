#pragma once

// Residue-branch polynomial functions in one and two variables: functions on
// the integers (or pairs of integers) that restrict to a polynomial on each
// residue class mod l. Includes the signed power basis r_{a,k}, symbolic
// parity tests, exact cone summation via Faulhaber, and decomposition of odd
// functions over the r-basis.

#include <toric/polynomial.hpp>
#include <toric/rational.hpp>

#include <cstdint>
#include <vector>

namespace toric {

// One-variable residue-branch polynomial: modulus l and one branch
// polynomial per residue class.
class ModLPoly1 {
 public:
  explicit ModLPoly1(int modulus);

  int modulus() const { return modulus_; }
  const Poly& branch(int residue) const;
  void set_branch(int residue, const Poly& p);

  Rational eval(long m) const;
  bool is_zero() const;
  std::size_t max_degree() const;

  ModLPoly1 operator+(const ModLPoly1& other) const;
  ModLPoly1 operator*(const Rational& scalar) const;
  bool operator==(const ModLPoly1& other) const;

 private:
  int modulus_;
  std::vector<Poly> branches_;
};

// Two-variable analogue on pairs of residue classes.
class ModLPoly2 {
 public:
  explicit ModLPoly2(int modulus);

  int modulus() const { return modulus_; }
  const Poly2& branch(int r1, int r2) const;
  void set_branch(int r1, int r2, const Poly2& p);

  Rational eval(long n1, long n2) const;
  bool is_zero() const;
  std::size_t max_degree() const;

  ModLPoly2 operator+(const ModLPoly2& other) const;
  ModLPoly2 operator*(const Rational& scalar) const;

 private:
  int modulus_;
  std::vector<Poly2> branches_;  // index r1 * modulus + r2
};

// Signed power-basis function
//   r_{a,k}(m) = m^k * (indicator[m = a mod l] - (-1)^k indicator[m = -a mod l]).
ModLPoly1 r_basis(int a, int k, int l);

// Symbolic parity: h(-m) = -h(m) as an identity of branch polynomials.
bool is_odd(const ModLPoly1& h);

// Symbolic parity: G(-n1,-n2) = G(n1,n2).
bool is_even2(const ModLPoly2& G);

// Closed form of f(d) = sum_{0<n<N*d} G(n, d) + G(0, d)/2 + G(N*d, d)/2 as a
// residue-branch polynomial in d, valid for every positive integer d.
// Requires is_even2(G); the result always satisfies is_odd.
ModLPoly1 cone_sum(const ModLPoly2& G, int N);

// One term of an r-basis decomposition: coefficient on r_{a, weight-1}.
struct RBasisTerm {
  int a;
  int weight;  // = power + 1
  Rational coeff;
};

// Decompose an odd h exactly as sum of coeff * r_{a, weight-1}; representatives
// use 0 <= a <= l/2. Ordered by (a, weight).
std::vector<RBasisTerm> to_tilde_combination(const ModLPoly1& h);

// Two-variable signed pair indicator
//   (alpha, beta) -> ind[alpha=a, beta=b] + (-1)^k ind[alpha=-a, beta=-b]  (mod l).
ModLPoly2 delta_bar(int l, long a, long b, int k);

// The cancellation-checker weight function
//   (alpha, beta) -> beta^r * (-alpha)^s * delta_bar(l, p*u, p*v, r+s+2)(alpha, beta),
// which is always even.
ModLPoly2 a_weight_function(int l, long u, long v, long p, int r, int s);

}  // namespace toric
