#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <toric/eisenstein.hpp>
#include <toric/qseries.hpp>
#include <toric/residue_poly.hpp>

#include <numeric>
#include <random>

using namespace toric;

TEST_CASE("constant terms") {
  CHECK(tilde_constant(1, 0, 4) == Rational(1) / 120);
  CHECK(tilde_constant(5, 1, 1) == Rational(3) / 10);
  CHECK(tilde_constant(5, 0, 1) == 0);
  CHECK(tilde_constant(5, 0, 3) == 0);  // odd weight at residue 0 cancels
  // Weight-1 constants descend linearly in the residue.
  for (int a = 1; a < 7; ++a)
    CHECK(tilde_constant(7, a, 1) == Rational(1) / 2 - Rational(a) / 7);
}

TEST_CASE("generator expansions") {
  SUBCASE("level one, weight four") {
    const QSeries f = tilde_s(1, 0, 4, 6);
    CHECK(f.coeff(0) == Rational(1) / 120);
    CHECK(f.coeff(1) == 2);    // both indicator terms fire at level 1
    CHECK(f.coeff(2) == 18);   // 2 * (1 + 8)
    CHECK(f.coeff(6) == 504);  // 2 * (1 + 8 + 27 + 216)
  }

  SUBCASE("odd weight at residue zero vanishes") {
    CHECK(tilde_s(5, 0, 3, 10).is_zero());
    CHECK(tilde_s(7, 0, 5, 10).is_zero());
    CHECK(tilde_s(3, 0, 1, 10).is_zero());
  }

  SUBCASE("pinned display") {
    CHECK(tilde_s(5, 1, 1, 5).to_display_string() == "3/10 + q + q^2 + q^3 + q^5");
  }

  SUBCASE("residue reflection symmetry") {
    for (int k = 1; k <= 5; ++k)
      for (int a = 1; a < 5; ++a) {
        const QSeries lhs = tilde_s(5, 5 - a, k, 15);
        const QSeries rhs = scale(Rational(k % 2 == 0 ? 1 : -1), tilde_s(5, a, k, 15));
        CHECK(lhs.same_coefficients(rhs));
      }
  }

  SUBCASE("divisor-sum bridge") {
    // Away from the constant term the expansion is the divisor sum of the
    // matching signed power-basis function of one lower degree.
    for (int k = 1; k <= 4; ++k)
      for (int a = 0; a < 5; ++a) {
        QSeries lhs = tilde_s(5, a, k, 20);
        lhs.set_coeff(0, Rational(0));
        const QSeries rhs = divisor_sum_series(r_basis(a, k - 1, 5), 20);
        CHECK(lhs.same_coefficients(rhs));
      }
  }
}

TEST_CASE("classical level-one series") {
  const QSeries e4 = eis_k(4, 8);
  CHECK(e4.coeff(0) == Rational(1) / 240);
  CHECK(e4.coeff(1) == 1);
  CHECK(e4.coeff(2) == 9);
  CHECK(e4.coeff(3) == 28);

  const QSeries e2 = eis_k(2, 4);
  CHECK(e2.coeff(0) == Rational(-1) / 24);
  CHECK(e2.coeff(1) == 1);
  CHECK(e2.coeff(2) == 3);
  CHECK(e2.coeff(3) == 4);

  CHECK_THROWS_AS((void)eis_k(3, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)eis_k(0, 5), std::invalid_argument);

  // The completed level-l, residue-0 generator sums the classical one over
  // scaled lattices; at l = 1 the two constructions coincide exactly.
  CHECK(scale(Rational(1) / 2, tilde_s(1, 0, 4, 8)).same_coefficients(e4));
}

TEST_CASE("label bookkeeping") {
  CHECK(make_eis_label(5, 7, 3).a == 2);
  CHECK(make_eis_label(5, -1, 3).a == 4);
  CHECK(make_eis_label(5, 0, 2).quasimodular());
  CHECK(make_eis_label(5, 5, 2).quasimodular());
  CHECK_FALSE(make_eis_label(5, 1, 2).quasimodular());
  CHECK_FALSE(make_eis_label(5, 0, 4).quasimodular());
  CHECK_THROWS_AS((void)make_eis_label(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)make_eis_label(5, 1, 0), std::invalid_argument);
}

TEST_CASE("prime-to-level relabeling") {
  const EisLabel base = make_eis_label(5, 1, 3);
  CHECK(diamond_relabel(2, base).a == 3);  // 2 * 3 = 6 = 1 mod 5
  CHECK(diamond_relabel(11, base).a == 1);  // p = 1 mod l acts trivially
  CHECK(diamond_relabel(2, make_eis_label(5, 0, 3)).a == 0);

  SUBCASE("composition matches multiplication") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
      const int l = 2 + static_cast<int>(rng() % 8);
      long p = 2 + static_cast<long>(rng() % 12);
      long q = 2 + static_cast<long>(rng() % 12);
      if (std::gcd(p, static_cast<long>(l)) != 1 || std::gcd(q, static_cast<long>(l)) != 1)
        continue;
      const EisLabel label = make_eis_label(l, static_cast<int>(rng() % static_cast<unsigned>(l)),
                                            1 + static_cast<int>(rng() % 4));
      const EisLabel two_step = diamond_relabel(p, diamond_relabel(q, label));
      const EisLabel one_step = diamond_relabel(p * q, label);
      CHECK(two_step == one_step);
    }
  }

  SUBCASE("pair labels relabel factorwise") {
    const PairLabel pair{{make_eis_label(5, 1, 1), make_eis_label(5, 2, 2)}};
    const PairLabel out = diamond_relabel(2, pair);
    CHECK(out.factors[0].a == 3);
    CHECK(out.factors[1].a == 1);
    CHECK(out.total_weight() == 3);
  }
}

TEST_CASE("product catalog") {
  const auto plain53 = pair_basis(5, 3, 10, false);
  const auto quasi53 = pair_basis(5, 3, 10, true);
  CHECK(plain53.size() == 45);
  CHECK(quasi53.size() == 55);
  const auto plain54 = pair_basis(5, 4, 10, false);
  const auto quasi54 = pair_basis(5, 4, 10, true);
  CHECK(plain54.size() == 71);
  CHECK(quasi54.size() == 80);

  for (const auto& [label, series] : plain53) {
    CHECK(label.total_weight() == 3);
    CHECK_FALSE(label.quasimodular());
    CHECK(series.same_coefficients(pair_series(label, 10)));
    CHECK(series.truncation() == 10);
  }
  bool saw_quasimodular = false;
  for (const auto& [label, series] : quasi53) saw_quasimodular |= label.quasimodular();
  CHECK(saw_quasimodular);

  SUBCASE("label formatting") {
    const PairLabel single{{make_eis_label(7, 3, 2)}};
    CHECK(single.to_string() == "s(3/7,2)");
    const PairLabel product{{make_eis_label(5, 1, 1), make_eis_label(5, 2, 2)}};
    CHECK(product.to_string() == "s(1/5,1)*s(2/5,2)");
  }

  SUBCASE("product series multiply out") {
    const PairLabel product{{make_eis_label(5, 1, 1), make_eis_label(5, 2, 2)}};
    const QSeries expect = tilde_s(5, 1, 1, 12) * tilde_s(5, 2, 2, 12);
    CHECK(pair_series(product, 12).same_coefficients(expect));
  }
}

TEST_CASE("Hecke action on expansions") {
  SUBCASE("level-one eigenform") {
    const QSeries e4 = eis_k(4, 20);
    const QSeries image = hecke_tp_on_form(e4, e4, 4, 2, 10);
    CHECK(image.same_coefficients(scale(Rational(9), e4.truncated(10))));  // 1 + 2^3
    const QSeries image3 = hecke_tp_on_form(e4, e4, 4, 3, 6);
    CHECK(image3.same_coefficients(scale(Rational(28), e4.truncated(6))));  // 1 + 3^3
  }

  SUBCASE("relabeled companion enters only at multiples of p") {
    const QSeries f = tilde_s(5, 1, 3, 20);
    const QSeries f_diamond = tilde_s(5, 3, 3, 20);  // label under p = 2
    const QSeries image = hecke_tp_on_form(f, f_diamond, 3, 2, 10);
    for (int n = 1; n <= 10; ++n) {
      Rational expect = f.coeff(2 * n);
      if (n % 2 == 0) expect += Rational(4) * f_diamond.coeff(n / 2);
      CHECK(image.coeff(n) == expect);
    }
    CHECK(image.coeff(0) == f.coeff(0) + Rational(4) * f_diamond.coeff(0));
  }

  SUBCASE("input guards") {
    const QSeries e4 = eis_k(4, 8);
    CHECK_THROWS_AS((void)hecke_tp_on_form(e4, e4, 4, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)hecke_tp_on_form(e4, e4, 4, 2, 8), std::invalid_argument);
  }
}
