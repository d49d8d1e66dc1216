#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <toric/eisenstein.hpp>
#include <toric/manin.hpp>
#include <toric/verify.hpp>

using namespace toric;

TEST_CASE("dimension oracles") {
  const Dims d53 = dims(5, 3);
  CHECK(d53.dim_M == 4);
  CHECK(d53.dim_S == 0);
  CHECK(d53.genus == 0);
  CHECK(d53.cusps == 4);
  CHECK(d53.index == 24);

  const Dims d73 = dims(7, 3);
  CHECK(d73.dim_M == 7);
  CHECK(d73.dim_S == 1);

  const Dims d54 = dims(5, 4);
  CHECK(d54.dim_M == 5);
  CHECK(d54.dim_S == 1);

  // With every cusp regular and weight >= 3, forms modulo cusp forms are cut
  // out by one condition per cusp.
  for (const Dims& d : {d53, d73, d54}) CHECK(d.dim_M - d.dim_S == d.cusps);

  CHECK(group_index(5) == 24);
  CHECK(group_index(7) == 48);
  CHECK(sturm_bound(5, 3) == 6);
  CHECK(sturm_bound(7, 3) == 12);
  CHECK(sturm_bound(1, 12) == 1);
}

TEST_CASE("eta products") {
  CHECK(eta_product({}, 10).coeff(0) == 1);

  SUBCASE("discriminant form") {
    const QSeries delta = eta_product({{1, 24}}, 10);
    CHECK(delta.coeff(0) == 0);
    CHECK(delta.coeff(1) == 1);
    CHECK(delta.coeff(2) == -24);
    CHECK(delta.coeff(3) == 252);
    CHECK(delta.coeff(4) == -1472);
  }

  SUBCASE("rejects fractional leading exponent") {
    CHECK_THROWS_AS((void)eta_product({{1, 1}}, 5), std::invalid_argument);
  }
}

TEST_CASE("cusp form oracles") {
  const QSeries f73 = newform_oracle(7, 3, 20);
  CHECK(f73.coeff(0) == 0);
  CHECK(f73.coeff(1) == 1);
  CHECK(f73.coeff(2) == -3);
  CHECK(f73.coeff(3) == 0);
  CHECK(f73.coeff(4) == 5);

  const QSeries f54 = newform_oracle(5, 4, 20);
  CHECK(f54.coeff(0) == 0);
  CHECK(f54.coeff(1) == 1);
  CHECK(f54.coeff(2) == -4);
  CHECK(f54.coeff(3) == 2);

  CHECK_THROWS_AS((void)newform_oracle(11, 2, 20), std::invalid_argument);
}

TEST_CASE("pair-product span ranks") {
  const SpanReport r53 = pair_span_report(5, 3, 20);
  CHECK(r53.rank == 4);
  CHECK(r53.labels.size() == 45);
  CHECK(r53.dim_M == 4);
  CHECK(r53.bounds_ok);
  CHECK(r53.stable);
}

TEST_CASE("cusp form membership with frozen combination") {
  const QSeries f73 = newform_oracle(7, 3, 40);
  const MembershipResult m = check_newform_membership(7, 3, f73, 40);
  REQUIRE(m.member);
  const std::vector<std::pair<std::string, Rational>> expected = {
      {"s(1/7,3)", Rational(3) / 7},
      {"s(2/7,3)", Rational(1)},
      {"s(3/7,3)", Rational(5) / 7},
      {"s(1/7,1)*s(1/7,2)", Rational(-8)},
      {"s(1/7,1)*s(3/7,2)", Rational(8)},
  };
  CHECK(m.combination == expected);
}

TEST_CASE("derivatives stay in the quasimodular pair span") {
  CHECK(check_derivs_in_pairs(5, 3, 25));
}

TEST_CASE("relation images in the singles-plus-derivatives subspace") {
  CHECK(check_mumap_relation(5, 3, 1, 2, 0, 1, 25));
  CHECK(check_mumap_relation(5, 3, 0, 1, 1, 0, 25));
  CHECK(check_mumap_all(5, 3, 22));
}

TEST_CASE("Hecke equivariance of the series image") {
  const SymbolSpace space(5, 3);
  const auto vectors = random_symbol_vectors(space, 1, 20260823u);
  REQUIRE(vectors.size() == 1);
  CHECK(check_hecke_equivariance(5, 3, 2, vectors[0], 32));
}

TEST_CASE("odd polynomial fit for symbol-valued divisor sums") {
  CHECK(check_oddprop_symbolic(5, 3, 30));
}

TEST_CASE("first-approximation identity") {
  for (long D = 1; D <= 8; ++D) CHECK(check_firstapprox(5, 3, D));
}

TEST_CASE("boundary segments against the matrix list") {
  for (long p : {2L, 3L, 5L, 7L}) CHECK(check_abcd(p));
}

TEST_CASE("thread partition check") {
  for (long D = 1; D <= 15; ++D) CHECK(check_threads_partition(D));
}

TEST_CASE("seeded random symbol vectors are reproducible") {
  const SymbolSpace space(5, 3);
  const auto first = random_symbol_vectors(space, 4, 99u);
  const auto second = random_symbol_vectors(space, 4, 99u);
  REQUIRE(first.size() == 4);
  REQUIRE(second.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(first[i].raw() == second[i].raw());
  const auto other_seed = random_symbol_vectors(space, 4, 100u);
  bool all_equal = true;
  for (std::size_t i = 0; i < 4; ++i) all_equal &= first[i].raw() == other_seed[i].raw();
  CHECK_FALSE(all_equal);
}

TEST_CASE("bundled randomized checks") {
  CHECK(check_hecke_commutation(5, 3, 5, 7u));
  CHECK(check_conesum_random(10, 7u));
  CHECK(check_odd_roundtrip(10, 7u, 30));
  CHECK(check_inside_zero(5, 3, 2, 6));
}
