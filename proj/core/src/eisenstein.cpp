#include <toric/eisenstein.hpp>

#include <toric/arith.hpp>

#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

int normalize_residue(long value, int modulus) {
  long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

// Multiplicative inverse of p mod l; requires gcd(p, l) = 1.
long inverse_mod(long p, long l) {
  long r = p % l;
  if (r < 0) r += l;
  for (long candidate = 0; candidate < l; ++candidate) {
    if ((candidate * r) % l == 1 % l) return candidate;
  }
  throw std::invalid_argument("inverse_mod: arguments are not coprime");
}

}  // namespace

EisLabel make_eis_label(int l, int a, int k) {
  if (l <= 0) throw std::invalid_argument("make_eis_label: level must be positive");
  if (k <= 0) throw std::invalid_argument("make_eis_label: weight must be positive");
  return EisLabel{l, normalize_residue(a, l), k};
}

Rational tilde_constant(int l, int a, int k) {
  if (k <= 0) throw std::invalid_argument("tilde_constant: weight must be positive");
  const int residue = normalize_residue(a, l);
  if (k == 1) {
    if (residue == 0) return Rational(0);
    return Rational(1, 2) - Rational(Integer(residue)) / Rational(Integer(l));
  }
  const Rational x = Rational(Integer(residue)) / Rational(Integer(l));
  const Rational minus_x_frac = fractional_part(-x);
  Rational value = bernoulli_polynomial(static_cast<unsigned>(k), x);
  const Rational mirrored = bernoulli_polynomial(static_cast<unsigned>(k), minus_x_frac);
  value += (k % 2 == 0) ? mirrored : -mirrored;
  const Rational scale =
      Rational(integer_pow(static_cast<long>(l), static_cast<unsigned long>(k - 1)));
  return -scale * value / Rational(Integer(2 * k));
}

QSeries tilde_s(int l, int a, int k, int N) {
  if (k <= 0) throw std::invalid_argument("tilde_s: weight must be positive");
  const int residue = normalize_residue(a, l);
  QSeries out(l, k, N);
  if (k == 1 && residue == 0) return out;  // the zero series
  out.set_coeff(0, tilde_constant(l, residue, k));
  const int minus_residue = (l - residue) % l;
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  for (int n = 1; n <= N; ++n) {
    Rational acc(0);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Rational weight(0);
      if (d % l == residue) weight += Rational(1);
      if (k == 1) {
        if (d % l == minus_residue) weight -= Rational(1);
      } else {
        if (d % l == minus_residue) weight += sign;
      }
      if (weight != 0) {
        acc += weight * Rational(integer_pow(d, static_cast<unsigned long>(k - 1)));
      }
    }
    out.set_coeff(n, acc);
  }
  return out;
}

QSeries eis_k(int k, int N) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("eis_k: weight must be even and >= 2");
  QSeries out(1, k, N);
  out.set_coeff(0, -bernoulli_number(static_cast<unsigned>(k)) / Rational(Integer(2 * k)));
  for (int n = 1; n <= N; ++n) {
    Rational acc(0);
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) acc += Rational(integer_pow(d, static_cast<unsigned long>(k - 1)));
    }
    out.set_coeff(n, acc);
  }
  return out;
}

EisLabel diamond_relabel(long p, const EisLabel& label) {
  if (std::gcd(p, static_cast<long>(label.l)) != 1) {
    throw std::invalid_argument("diamond_relabel: p must be coprime to the level");
  }
  const long p_inverse = inverse_mod(p, label.l);
  return make_eis_label(label.l, normalize_residue(p_inverse * label.a, label.l), label.k);
}

int PairLabel::total_weight() const {
  int total = 0;
  for (const auto& f : factors) total += f.k;
  return total;
}

bool PairLabel::quasimodular() const {
  for (const auto& f : factors) {
    if (f.quasimodular()) return true;
  }
  return false;
}

std::string PairLabel::to_string() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += "s(" + std::to_string(f.a) + "/" + std::to_string(f.l) + "," + std::to_string(f.k) + ")";
  }
  return out;
}

PairLabel diamond_relabel(long p, const PairLabel& label) {
  PairLabel out;
  for (const auto& f : label.factors) out.factors.push_back(diamond_relabel(p, f));
  return out;
}

QSeries pair_series(const PairLabel& label, int N) {
  if (label.factors.empty()) throw std::invalid_argument("pair_series: empty label");
  QSeries out = tilde_s(label.factors[0].l, label.factors[0].a, label.factors[0].k, N);
  for (std::size_t i = 1; i < label.factors.size(); ++i) {
    out = out * tilde_s(label.factors[i].l, label.factors[i].a, label.factors[i].k, N);
  }
  return out;
}

std::vector<std::pair<PairLabel, QSeries>> pair_basis(int l, int k, int N,
                                                      bool include_quasimodular) {
  if (k < 2) throw std::invalid_argument("pair_basis: weight must be >= 2");
  std::vector<std::pair<PairLabel, QSeries>> out;
  for (int a = 0; a < l; ++a) {
    PairLabel label{{make_eis_label(l, a, k)}};
    if (!include_quasimodular && label.quasimodular()) continue;
    out.emplace_back(label, pair_series(label, N));
  }
  for (int m = 1; m < k; ++m) {
    const int n = k - m;
    for (int a = 0; a < l; ++a) {
      for (int b = 0; b < l; ++b) {
        PairLabel label{{make_eis_label(l, a, m), make_eis_label(l, b, n)}};
        if (!include_quasimodular && label.quasimodular()) continue;
        out.emplace_back(label, pair_series(label, N));
      }
    }
  }
  return out;
}

QSeries hecke_tp_on_form(const QSeries& f, const QSeries& f_diamond, int k, long p, int N_out) {
  if (p < 2) throw std::invalid_argument("hecke_tp_on_form: p must be a prime >= 2");
  if (f.truncation() < static_cast<int>(p) * N_out ||
      f_diamond.truncation() < static_cast<int>(p) * N_out) {
    throw std::invalid_argument("hecke_tp_on_form: inputs truncated below p * N_out");
  }
  const Rational p_power = Rational(integer_pow(p, static_cast<unsigned long>(k - 1)));
  QSeries out(f.level(), k, N_out);
  for (int n = 0; n <= N_out; ++n) {
    Rational value = f.coeff(static_cast<int>(p) * n);
    if (n % p == 0) value += p_power * f_diamond.coeff(n / static_cast<int>(p));
    out.set_coeff(n, value);
  }
  return out;
}

}  // namespace toric
