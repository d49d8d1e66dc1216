#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <toric/arith.hpp>

#include <random>

using namespace toric;

namespace {

Rational random_rational(std::mt19937& rng) {
  const long num = static_cast<long>(rng() % 201) - 100;
  const long den = 1 + static_cast<long>(rng() % 20);
  return Rational(num) / den;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(20, 10) == 184756);

  SUBCASE("row sums are powers of two") {
    Integer power(1);
    for (unsigned long n = 0; n <= 20; ++n) {
      Integer row_sum(0);
      for (unsigned long k = 0; k <= n; ++k) row_sum += binomial(n, k);
      CHECK(row_sum == power);
      power *= 2;
    }
  }

  SUBCASE("Pascal recurrence") {
    for (unsigned long n = 1; n <= 15; ++n) {
      for (unsigned long k = 1; k <= n; ++k) {
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      }
    }
  }
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1) / 2);
  CHECK(bernoulli_number(2) == Rational(1) / 6);
  CHECK(bernoulli_number(4) == Rational(-1) / 30);
  CHECK(bernoulli_number(12) == Rational(-691) / 2730);
  for (unsigned k = 3; k <= 13; k += 2) CHECK(bernoulli_number(k) == 0);
}

TEST_CASE("Bernoulli polynomial values") {
  CHECK(bernoulli_polynomial(1, Rational(1) / 5) == Rational(-3) / 10);
  CHECK(bernoulli_polynomial(0, Rational(7) / 3) == 1);
  CHECK(bernoulli_polynomial(4, Rational(0)) == Rational(-1) / 30);
  // B_k(0) is the k-th Bernoulli number.
  for (unsigned k = 0; k <= 12; ++k) {
    CHECK(bernoulli_polynomial(k, Rational(0)) == bernoulli_number(k));
  }
}

TEST_CASE("Bernoulli polynomial reflection identity") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = random_rational(rng);
    for (unsigned k = 0; k <= 12; ++k) {
      const Rational lhs = bernoulli_polynomial(k, Rational(1) - x);
      const Rational rhs =
          (k % 2 == 0 ? Rational(1) : Rational(-1)) * bernoulli_polynomial(k, x);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Bernoulli polynomial telescoping identity") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = random_rational(rng);
    Rational x_power(1);  // x^{k-1}
    for (unsigned k = 1; k <= 12; ++k) {
      const Rational lhs =
          bernoulli_polynomial(k, x + Rational(1)) - bernoulli_polynomial(k, x);
      CHECK(lhs == Rational(static_cast<long>(k)) * x_power);
      x_power *= x;
    }
  }
}

TEST_CASE("rational string forms") {
  CHECK(to_string(Rational(3) / 10) == "3/10");
  CHECK(to_string(Rational(-8)) == "-8");
  CHECK(rational_from_string("22/7") == Rational(22) / 7);
  CHECK(rational_from_string("-5") == Rational(-5));
  CHECK(rational_from_string(to_string(Rational(-46) / 28)) == Rational(-23) / 14);
}
