#include <toric/verify.hpp>

#include <toric/arith.hpp>
#include <toric/eisenstein.hpp>
#include <toric/lattice.hpp>
#include <toric/residue_poly.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace toric {

namespace {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long to_integer(const Rational& x, const char* what) {
  Rational canon = x;
  canon.canonicalize();
  if (canon.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
  return canon.get_num().get_si();
}

Rational sign_pow(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

long group_index(int l) {
  Rational idx = Rational(Integer(l) * Integer(l));
  long rem = l;
  for (long p = 2; p * p <= rem; ++p) {
    if (rem % p == 0) {
      idx *= Rational(p * p - 1, p * p);
      while (rem % p == 0) rem /= p;
    }
  }
  if (rem > 1) idx *= Rational(rem * rem - 1, rem * rem);
  return to_integer(idx, "group index");
}

int sturm_bound(int l, int k) {
  long idx = group_index(l);
  long num = static_cast<long>(k) * idx;
  return static_cast<int>((num + 11) / 12);
}

Dims dims(int l, int k) {
  if (l < 5 || k < 2) throw std::invalid_argument("dimension oracle needs level >= 5, weight >= 2");
  long index = group_index(l);
  Rational cusps_r(0);
  for (long d = 1; d <= l; ++d)
    if (l % d == 0) cusps_r += Rational(euler_phi(d) * euler_phi(l / d));
  cusps_r /= 2;
  long cusps = to_integer(cusps_r, "cusp count");
  Rational genus_r = Rational(1) + Rational(index) / 24 - Rational(cusps) / 2;
  long g = to_integer(genus_r, "genus");

  long dim_S, dim_M;
  if (k == 2) {
    dim_S = g;
    dim_M = g + cusps - 1;
  } else {
    Rational s = Rational((k - 1) * (g - 1));
    if (k % 2 == 0)
      s += Rational((k / 2 - 1) * cusps);
    else
      s += Rational((k - 2) * cusps) / 2;
    dim_S = to_integer(s, "cusp-form dimension");
    dim_M = dim_S + cusps;
  }
  return Dims{dim_M, dim_S, g, cusps, index};
}

QSeries eta_product(const std::vector<std::pair<long, long>>& factors, int N) {
  long exponent_24 = 0;
  long weight_2 = 0;
  long level = 1;
  for (const auto& [d, e] : factors) {
    if (d <= 0 || e == 0) throw std::invalid_argument("scales must be positive, exponents nonzero");
    exponent_24 += d * e;
    weight_2 += e;
    level = std::lcm(level, d);
  }
  if (exponent_24 % 24 != 0 || exponent_24 < 0)
    throw std::invalid_argument("leading exponent is not a nonnegative integer");
  if (weight_2 % 2 != 0) throw std::invalid_argument("total weight is not integral");
  long lead = exponent_24 / 24;

  QSeries result(static_cast<int>(level), static_cast<int>(weight_2 / 2), N);
  if (lead <= N) result.set_coeff(static_cast<int>(lead), Rational(1));

  for (const auto& [d, e] : factors) {
    for (long n = 1; n * d <= N; ++n) {
      int m = static_cast<int>(n * d);
      QSeries factor(static_cast<int>(level), 0, N);
      if (e > 0) {
        factor.set_coeff(0, Rational(1));
        factor.set_coeff(m, Rational(-1));
      } else {
        // geometric expansion of 1 / (1 - q^m)
        for (int j = 0; j * m <= N; ++j) factor.set_coeff(j * m, Rational(1));
      }
      for (long rep = 0; rep < std::abs(e); ++rep) {
        QSeries next(result.level(), result.weight(), N);
        // keep the weight tag: multiply coefficients directly
        for (int i = 0; i <= N; ++i) {
          Rational acc(0);
          for (int j = 0; j <= i; ++j) acc += result.coeff(j) * factor.coeff(i - j);
          next.set_coeff(i, acc);
        }
        result = next;
      }
    }
  }
  return result;
}

QSeries newform_oracle(int l, int k, int N) {
  if (l == 7 && k == 3) return eta_product({{1, 3}, {7, 3}}, N);
  if (l == 5 && k == 4) return eta_product({{1, 4}, {5, 4}}, N);
  throw std::invalid_argument("no cusp-form oracle at this (level, weight)");
}

namespace {

std::size_t pair_rank(int l, int k, int N, bool quasimodular) {
  EchelonBasis span(static_cast<std::size_t>(N) + 1);
  for (const auto& [label, series] : pair_basis(l, k, N, quasimodular))
    span.insert(series.coefficients());
  return span.rank();
}

}  // namespace

SpanReport pair_span_report(int l, int k, int N) {
  if (N < sturm_bound(l, k))
    throw std::invalid_argument("truncation below the coefficient bound");
  SpanReport report;
  report.level = l;
  report.weight = k;
  report.truncation = N;
  EchelonBasis span(static_cast<std::size_t>(N) + 1);
  for (const auto& [label, series] : pair_basis(l, k, N, false)) {
    report.labels.push_back(label.to_string());
    span.insert(series.coefficients());
  }
  report.rank = span.rank();
  Dims d = dims(l, k);
  report.dim_M = d.dim_M;
  report.dim_S = d.dim_S;
  report.bounds_ok = static_cast<long>(report.rank) >= d.dim_S &&
                     static_cast<long>(report.rank) <= d.dim_M;
  report.stable = (pair_rank(l, k, N + 10, false) == report.rank);
  return report;
}

MembershipResult check_newform_membership(int l, int k, const QSeries& newform, int N) {
  if (N < sturm_bound(l, k) + 10)
    throw std::invalid_argument("truncation below the coefficient bound plus slack");
  if (newform.truncation() < N) throw std::invalid_argument("oracle series too short");

  auto basis = pair_basis(l, k, N, false);
  EchelonBasis span(static_cast<std::size_t>(N) + 1, /*track_transform=*/true);
  for (const auto& [label, series] : basis) span.insert(series.coefficients());

  std::vector<Rational> target(newform.coefficients().begin(),
                               newform.coefficients().begin() + N + 1);
  ReduceResult red = span.reduce(target);

  MembershipResult out;
  out.member = red.in_span();
  if (!out.member) return out;

  std::vector<Rational> label_coeffs(basis.size(), Rational(0));
  const auto& transform = span.transform();
  for (std::size_t i = 0; i < red.coefficients.size(); ++i) {
    if (red.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < basis.size(); ++j)
      label_coeffs[j] += red.coefficients[i] * transform[i][j];
  }
  // The reported combination must reproduce every coefficient.
  std::vector<Rational> rebuilt(static_cast<std::size_t>(N) + 1, Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (label_coeffs[j] == 0) continue;
    const auto& coeffs = basis[j].second.coefficients();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(N); ++i)
      rebuilt[i] += label_coeffs[j] * coeffs[i];
  }
  if (rebuilt != target) throw std::logic_error("combination fails to reproduce the series");
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (label_coeffs[j] != 0)
      out.combination.push_back({basis[j].first.to_string(), label_coeffs[j]});
  return out;
}

EchelonBasis eis_deriv_subspace(int l, int k, int N) {
  if (k < 3) throw std::invalid_argument("needs weight at least 3");
  EchelonBasis span(static_cast<std::size_t>(N) + 1);
  for (int a = 0; a < l; ++a) span.insert(tilde_s(l, a, k, N).coefficients());
  for (int a = 0; a < l; ++a)
    span.insert(tilde_s(l, a, k - 2, N).q_derivative().coefficients());
  return span;
}

bool check_derivs_in_pairs(int l, int k, int N) {
  if (k < 3) throw std::invalid_argument("needs weight at least 3");
  EchelonBasis span(static_cast<std::size_t>(N) + 1);
  for (const auto& [label, series] : pair_basis(l, k, N, true))
    span.insert(series.coefficients());
  for (int a = 0; a < l; ++a) {
    QSeries deriv = tilde_s(l, a, k - 2, N).q_derivative();
    if (!span.reduce(deriv.coefficients()).in_span()) return false;
  }
  return true;
}

bool check_mumap_relation(int l, int k, int a, int b, int r, int s, int N) {
  if (r + s != k - 2 || k <= 2) throw std::invalid_argument("exponents must sum to weight minus two");
  QSeries image = mu_image(l, r, s, a, b, N);
  for (int t = 0; t <= s; ++t) {
    Rational c = sign_pow(r) * Rational(binomial(s, t)) * sign_pow(s - t);
    image = image + scale(c, mu_image(l, t, r + s - t, b, -a - b, N));
  }
  for (int t = 0; t <= r; ++t) {
    Rational c = sign_pow(s) * Rational(binomial(r, t)) * sign_pow(r - t);
    image = image + scale(c, mu_image(l, s + r - t, t, -a - b, a, N));
  }
  return eis_deriv_subspace(l, k, N).reduce(image.coefficients()).in_span();
}

bool check_mumap_all(int l, int k, int N) {
  EchelonBasis span = eis_deriv_subspace(l, k, N);
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      if (std::gcd(std::gcd(a, b), l) != 1) continue;
      for (int r = 0; r <= k - 2; ++r) {
        int s = k - 2 - r;
        QSeries image = mu_image(l, r, s, a, b, N);
        for (int t = 0; t <= s; ++t) {
          Rational c = sign_pow(r) * Rational(binomial(s, t)) * sign_pow(s - t);
          image = image + scale(c, mu_image(l, t, r + s - t, b, -a - b, N));
        }
        for (int t = 0; t <= r; ++t) {
          Rational c = sign_pow(s) * Rational(binomial(r, t)) * sign_pow(r - t);
          image = image + scale(c, mu_image(l, s + r - t, t, -a - b, a, N));
        }
        if (!span.reduce(image.coefficients()).in_span()) return false;
      }
    }
  }
  return true;
}

bool check_hecke_equivariance(int l, int k, long p, const SymbolVector& w, int N) {
  if (k <= 2) throw std::invalid_argument("needs weight at least 3");
  if (std::gcd(p, static_cast<long>(l)) != 1)
    throw std::invalid_argument("prime must be coprime to the level");
  if (N < p * (sturm_bound(l, k) + 10))
    throw std::invalid_argument("input truncation too small");
  const SymbolSpace& space = w.space();
  const int N_out = static_cast<int>(N / p);

  QSeries symbol_side = mu_image(hecke_tn(w, p), N_out);

  SymbolVector wd = epsilon_diamond(w, p);
  QSeries f(l, k, N), f_diamond(l, k, N);
  for (std::size_t g = 0; g < space.num_generators(); ++g) {
    const Rational& c = wd.raw()[g];
    if (c == 0) continue;
    const auto& gen = space.generator(g);
    const int r = gen.x_power, s = k - 2 - r;
    PairLabel label{{make_eis_label(l, gen.u, s + 1), make_eis_label(l, gen.v, r + 1)}};
    Rational coeff = c * sign_pow(s);
    f = f + scale(coeff, pair_series(label, N));
    f_diamond = f_diamond + scale(coeff, pair_series(diamond_relabel(p, label), N));
  }
  QSeries form_side = hecke_tp_on_form(f, f_diamond, k, p, N_out);

  QSeries difference = symbol_side - form_side;
  return eis_deriv_subspace(l, k, N_out).reduce(difference.coefficients()).in_span();
}

bool check_oddprop_symbolic(int l, int k, int M_max) {
  if (M_max < l * (k + 2)) throw std::invalid_argument("sample range too small");
  SymbolSpace space(l, k);
  const std::size_t dim = space.quotient_dim();

  std::vector<std::vector<Rational>> samples(M_max + 1);
  for (int m = 1; m <= M_max; ++m) {
    SymbolVector h = r_symbol(space, m, 0, SymmetrizationSign::plus);
    for (int j = 1; j < m; ++j)
      h = h + r_symbol(space, m, j, SymmetrizationSign::plus) * Rational(2);
    samples[m] = space.quotient_coordinates(h.raw());
  }

  for (std::size_t c = 0; c < dim; ++c) {
    ModLPoly1 fitted(l);
    for (int rho = 0; rho < l; ++rho) {
      std::vector<std::pair<Rational, Rational>> points;
      std::vector<std::pair<long, Rational>> all_points;
      for (int m = (rho == 0) ? l : rho; m <= M_max; m += l) {
        all_points.push_back({m, samples[m][c]});
        if (points.size() < static_cast<std::size_t>(k) + 1)
          points.push_back({Rational(m), samples[m][c]});
      }
      Poly branch = interpolate(points);
      for (const auto& [m, value] : all_points)
        if (branch(Rational(m)) != value) return false;
      fitted.set_branch(rho, branch);
    }
    if (!is_odd(fitted)) return false;
  }
  return true;
}

bool check_firstapprox(int l, int k, long D) {
  SymbolSpace space(l, k);
  auto rplus = [&](long m, long n) {
    return r_symbol(space, m, n, SymmetrizationSign::plus);
  };
  SymbolVector lhs = SymbolVector::zero(space);
  for (const IQuad& t : enumerate_I(D))
    lhs = lhs + rplus(t.k1, t.k1 - t.k2) - rplus(t.k1, t.k1 + t.k2);
  SymbolVector rhs = SymbolVector::zero(space);
  for (long d = 1; d <= D; ++d) {
    if (D % d != 0) continue;
    rhs = rhs - rplus(d, 0) * Rational(2 * (D / d) + 1);
    for (long e = 1; e < d; ++e) rhs = rhs - rplus(d, d - e) * Rational(2);
  }
  for (const HeckeQuad& h : enumerate_H(D)) rhs = rhs - rplus(h.c, h.d) * Rational(3);
  return lhs.equal_in_quotient(rhs);
}

bool check_abcd(long p) {
  std::vector<HeckeQuad> collected;
  for (const Sublattice& S : sublattices_index_p(p))
    for (const HeckeQuad& h : boundary_segment_quads(S)) collected.push_back(h);
  std::sort(collected.begin(), collected.end());
  return collected == enumerate_H(p);
}

bool check_threads_partition(long D) {
  std::vector<IQuad> all = enumerate_I(D);
  std::vector<IQuad> covered;
  for (const auto& chain : threads(D)) {
    if (chain.empty()) return false;
    if (chain.front().m1 != chain.front().m2) return false;
    if (chain.back().k1 != chain.back().k2) return false;
    for (const IQuad& t : chain) covered.push_back(t);
  }
  std::sort(covered.begin(), covered.end());
  if (covered != all) return false;
  for (const IQuad& t : all) {
    if (auto up = thread_up(t)) {
      auto back = thread_down(*up);
      if (!back || !(*back == t)) return false;
    }
    if (auto down = thread_down(t)) {
      auto back = thread_up(*down);
      if (!back || !(*back == t)) return false;
    }
  }
  return true;
}

std::vector<SymbolVector> random_symbol_vectors(const SymbolSpace& space,
                                                std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<SymbolVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Rational> raw(space.num_generators());
    for (Rational& c : raw) c = Rational(static_cast<long>(rng() % 7) - 3);
    out.push_back(SymbolVector(space, std::move(raw)));
  }
  return out;
}

bool check_hecke_commutation(int l, int k, std::size_t count, unsigned seed) {
  SymbolSpace space(l, k);
  for (const SymbolVector& w : random_symbol_vectors(space, count, seed)) {
    SymbolVector t23 = hecke_tn(hecke_tn(w, 3), 2);
    SymbolVector t32 = hecke_tn(hecke_tn(w, 2), 3);
    SymbolVector t6 = hecke_tn(w, 6);
    if (!t23.equal_in_quotient(t6) || !t32.equal_in_quotient(t6)) return false;
    for (auto sign : {SymmetrizationSign::plus, SymmetrizationSign::minus}) {
      SymbolVector sym_then_hecke = hecke_tn(symmetrize(w, sign), 2);
      SymbolVector hecke_then_sym = symmetrize(hecke_tn(w, 2), sign);
      if (!sym_then_hecke.equal_in_quotient(hecke_then_sym)) return false;
    }
  }
  return true;
}

bool check_conesum_random(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  auto small_coeff = [&rng]() { return Rational(static_cast<long>(rng() % 9) - 4); };
  for (std::size_t trial = 0; trial < count; ++trial) {
    const int l = 1 + static_cast<int>(rng() % 6);
    const int N = 1 + static_cast<int>(rng() % 3);
    ModLPoly2 G(l);
    for (int r1 = 0; r1 < l; ++r1) {
      for (int r2 = 0; r2 < l; ++r2) {
        const int p1 = (l - r1) % l, p2 = (l - r2) % l;
        if (std::pair(r1, r2) > std::pair(p1, p2)) continue;
        const bool self_paired = (r1 == p1 && r2 == p2);
        Poly2 branch;
        for (int i = 0; i <= 4; ++i) {
          for (int j = 0; i + j <= 4; ++j) {
            Rational c = small_coeff();
            // A self-paired branch must itself be even in (x, y).
            if (self_paired && (i + j) % 2 != 0) continue;
            branch = branch + Poly2::monomial(i, j, c);
          }
        }
        G.set_branch(r1, r2, branch);
        if (!self_paired) G.set_branch(p1, p2, branch.reflected());
      }
    }
    if (!is_even2(G)) return false;
    ModLPoly1 f = cone_sum(G, N);
    if (!is_odd(f)) return false;
    for (long d = 1; d <= 40; ++d) {
      Rational direct = (G.eval(0, d) + G.eval(static_cast<long>(N) * d, d)) / 2;
      for (long n = 1; n < static_cast<long>(N) * d; ++n) direct += G.eval(n, d);
      if (f.eval(d) != direct) return false;
    }
  }
  return true;
}

bool check_odd_roundtrip(std::size_t count, unsigned seed, int order) {
  std::mt19937 rng(seed);
  for (std::size_t trial = 0; trial < count; ++trial) {
    const int l = 2 + static_cast<int>(rng() % 5);
    ModLPoly1 h(l);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      const int a = static_cast<int>(rng() % l);
      const int power = static_cast<int>(rng() % 5);
      const long c = static_cast<long>(rng() % 9) - 4;
      h = h + r_basis(a, power, l) * Rational(c);
    }
    if (!is_odd(h)) return false;
    ModLPoly1 rebuilt(l);
    QSeries recombined(l, 0, order);
    for (const RBasisTerm& term : to_tilde_combination(h)) {
      rebuilt = rebuilt + r_basis(term.a, term.weight - 1, l) * term.coeff;
      QSeries s = tilde_s(l, term.a, term.weight, order);
      s.set_coeff(0, Rational(0));
      recombined = recombined + s * term.coeff;
    }
    if (!(rebuilt == h)) return false;
    if (!recombined.same_coefficients(divisor_sum_series(h, order))) return false;
  }
  return true;
}

bool check_inside_zero(int l, int k, long p, long D_max) {
  const int top = k - 2;
  for (const Sublattice& S : sublattices_index_p(p)) {
    for (long D = 1; D <= D_max; ++D) {
      for (const SignedQuad& t : admissible_quadruples(S, p, D)) {
        for (int r = 0; r <= top; ++r) {
          const int s = top - r;
          for (long u = 0; u < l; ++u) {
            for (long v = 0; v < l; ++v) {
              if (std::gcd(std::gcd(u, v), static_cast<long>(l)) != 1) continue;
              if (inside_cancellation_check(S, p, l, r, s, u, v, t) != 0) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace toric
