#include <toric/arith.hpp>

#include <mutex>
#include <vector>

namespace toric {

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache;  // bernoulli_cache[k] = B_k

// Extend the cache through index k using the defining recurrence
//   sum_{j=0}^{n} C(n+1, j) B_j = 0   (n >= 1),
// which yields B_1 = -1/2.
void extend_cache_locked(unsigned k) {
  if (bernoulli_cache.empty()) bernoulli_cache.emplace_back(1);
  for (unsigned n = static_cast<unsigned>(bernoulli_cache.size()); n <= k; ++n) {
    Rational acc(0);
    for (unsigned j = 0; j < n; ++j) {
      acc += Rational(binomial(n + 1, j)) * bernoulli_cache[j];
    }
    bernoulli_cache.emplace_back(-acc / Rational(n + 1));
  }
}

}  // namespace

Rational bernoulli_number(unsigned k) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  extend_cache_locked(k);
  return bernoulli_cache[k];
}

Rational bernoulli_polynomial(unsigned k, const Rational& x) {
  // Horner evaluation of sum_j C(k, j) B_j x^{k-j}.
  Rational acc(0);
  for (unsigned j = 0; j <= k; ++j) {
    acc = acc * x + Rational(binomial(k, j)) * bernoulli_number(j);
  }
  return acc;
}

}  // namespace toric
