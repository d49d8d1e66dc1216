#pragma once

// Binomial coefficients and Bernoulli numbers/polynomial values.
// Convention: B_1 = -1/2 (equivalently B_k = B_k(0) with the recurrence
// sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1).

#include <toric/rational.hpp>

namespace toric {

// C(n, k) with the convention C(n, k) = 0 for k > n; n, k >= 0.
Integer binomial(unsigned long n, unsigned long k);

// k-th Bernoulli number, memoized; safe for concurrent callers.
Rational bernoulli_number(unsigned k);

// Value of the k-th Bernoulli polynomial:
// B_k(x) = sum_{j=0}^{k} C(k, j) B_j x^{k-j}.
Rational bernoulli_polynomial(unsigned k, const Rational& x);

}  // namespace toric
