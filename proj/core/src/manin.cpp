#include <toric/manin.hpp>

#include <toric/arith.hpp>
#include <toric/eisenstein.hpp>
#include <toric/lattice.hpp>

#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

int mod_l(long x, int l) { return static_cast<int>(((x % l) + l) % l); }

Rational sign_pow(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

SymbolSpace::SymbolSpace(int l, int k) : l_(l), k_(k), relations_(0) {
  if (l < 1 || k < 2) throw std::invalid_argument("need level >= 1 and weight >= 2");

  pair_index_.assign(l, std::vector<int>(l, -1));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < l; ++u) {
    for (int v = 0; v < l; ++v) {
      if (std::gcd(std::gcd(u, v), l) == 1) {
        pair_index_[u][v] = static_cast<int>(pairs.size());
        pairs.push_back({u, v});
      }
    }
  }
  num_pairs_ = pairs.size();

  for (int i = 0; i <= k - 2; ++i)
    for (const auto& [u, v] : pairs) generators_.push_back({i, u, v});

  relations_ = EchelonBasis(generators_.size());
  const std::size_t n = generators_.size();

  auto add_at = [&](std::vector<Rational>& row, int x_power, long u, long v,
                    const Rational& c) {
    auto idx = generator_index(x_power, u, v);
    if (idx) row[*idx] += c;
  };

  for (std::size_t g = 0; g < n; ++g) {
    const Generator& gen = generators_[g];
    const int r = gen.x_power;
    const int s = k - 2 - r;
    const long u = gen.u, v = gen.v;

    // Two-term family: x^r y^s (u,v) + (-1)^r x^s y^r (v,-u) = 0.
    std::vector<Rational> row1(n, Rational(0));
    row1[g] += 1;
    add_at(row1, s, v, -u, sign_pow(r));
    relations_.insert(row1);

    // Three-term family:
    //   x^r y^s (u,v) + (-1)^r [y^r (x-y)^s](v, -u-v)
    //                 + (-1)^s [(y-x)^r x^s](-u-v, u) = 0,
    // with the bracketed polynomials expanded binomially.
    std::vector<Rational> row2(n, Rational(0));
    row2[g] += 1;
    for (int t = 0; t <= s; ++t) {
      Rational c = Rational(binomial(s, t)) * sign_pow(s - t) * sign_pow(r);
      add_at(row2, t, v, -u - v, c);
    }
    for (int t = 0; t <= r; ++t) {
      Rational c = Rational(binomial(r, t)) * sign_pow(r - t) * sign_pow(s);
      add_at(row2, s + r - t, -u - v, u, c);
    }
    relations_.insert(row2);
  }
}

std::optional<std::size_t> SymbolSpace::generator_index(int x_power, long u,
                                                        long v) const {
  if (x_power < 0 || x_power > k_ - 2)
    throw std::out_of_range("monomial exponent out of range");
  int slot = pair_index_[mod_l(u, l_)][mod_l(v, l_)];
  if (slot < 0) return std::nullopt;
  return static_cast<std::size_t>(x_power) * num_pairs_ +
         static_cast<std::size_t>(slot);
}

std::vector<Rational> SymbolSpace::reduce(const std::vector<Rational>& raw) const {
  return relations_.reduce(raw).residual;
}

std::vector<Rational> SymbolSpace::quotient_coordinates(
    const std::vector<Rational>& raw) const {
  std::vector<Rational> res = reduce(raw);
  std::vector<Rational> out;
  for (std::size_t col : relations_.non_pivot_columns()) out.push_back(res[col]);
  return out;
}

SymbolVector::SymbolVector(const SymbolSpace& space, std::vector<Rational> raw)
    : space_(&space), raw_(std::move(raw)) {
  if (raw_.size() != space.num_generators())
    throw std::invalid_argument("coordinate length mismatch");
  reduced_ = space.reduce(raw_);
}

SymbolVector SymbolVector::zero(const SymbolSpace& space) {
  return SymbolVector(space, std::vector<Rational>(space.num_generators(), Rational(0)));
}

bool SymbolVector::is_zero_in_quotient() const {
  for (const Rational& c : reduced_)
    if (c != 0) return false;
  return true;
}

bool SymbolVector::equal_in_quotient(const SymbolVector& other) const {
  return reduced_ == other.reduced_;
}

SymbolVector SymbolVector::operator+(const SymbolVector& other) const {
  std::vector<Rational> raw = raw_;
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] += other.raw_[i];
  return SymbolVector(*space_, std::move(raw));
}

SymbolVector SymbolVector::operator-(const SymbolVector& other) const {
  std::vector<Rational> raw = raw_;
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] -= other.raw_[i];
  return SymbolVector(*space_, std::move(raw));
}

SymbolVector SymbolVector::operator*(const Rational& scalar) const {
  std::vector<Rational> raw = raw_;
  for (Rational& c : raw) c *= scalar;
  return SymbolVector(*space_, std::move(raw));
}

SymbolVector monomial_symbol(const SymbolSpace& space, int x_power, long u, long v,
                             const Rational& coefficient) {
  std::vector<Rational> raw(space.num_generators(), Rational(0));
  if (auto idx = space.generator_index(x_power, u, v)) raw[*idx] = coefficient;
  return SymbolVector(space, std::move(raw));
}

SymbolVector iota(const SymbolVector& v) {
  const SymbolSpace& space = v.space();
  std::vector<Rational> raw(space.num_generators(), Rational(0));
  for (std::size_t g = 0; g < space.num_generators(); ++g) {
    const Rational& c = v.raw()[g];
    if (c == 0) continue;
    const auto& gen = space.generator(g);
    auto idx = space.generator_index(gen.x_power, -gen.u, gen.v);
    raw[*idx] += sign_pow(gen.x_power) * c;
  }
  return SymbolVector(space, std::move(raw));
}

SymbolVector symmetrize(const SymbolVector& v, SymmetrizationSign sign) {
  SymbolVector image = iota(v);
  SymbolVector combined =
      (sign == SymmetrizationSign::plus) ? v + image : v - image;
  return combined * Rational(1, 2);
}

SymbolVector r_symbol(const SymbolSpace& space, long m, long n,
                      std::optional<SymmetrizationSign> sign) {
  const int K = space.weight() - 2;
  std::vector<Rational> raw(space.num_generators(), Rational(0));
  long g = std::gcd(std::gcd(std::abs(m), std::abs(n)), static_cast<long>(space.level()));
  if (g == 1) {
    // (m x + n y)^K placed at the residue pair; the integers themselves carry
    // the polynomial part.
    std::vector<Integer> m_pows(K + 1), n_pows(K + 1);
    Integer acc(1);
    for (int j = 0; j <= K; ++j) {
      m_pows[j] = acc;
      acc *= m;
    }
    acc = 1;
    for (int j = 0; j <= K; ++j) {
      n_pows[j] = acc;
      acc *= n;
    }
    for (int j = 0; j <= K; ++j) {
      Integer c = binomial(K, j) * m_pows[j] * n_pows[K - j];
      auto idx = space.generator_index(j, m, n);
      raw[*idx] = Rational(c);
    }
  }
  SymbolVector out(space, std::move(raw));
  if (sign) out = symmetrize(out, *sign);
  return out;
}

SymbolVector hecke_tn(const SymbolVector& v, long n) {
  if (n <= 0) throw std::invalid_argument("operator index must be positive");
  const SymbolSpace& space = v.space();
  const int K = space.weight() - 2;
  std::vector<Rational> raw(space.num_generators(), Rational(0));
  std::vector<HeckeQuad> quads = enumerate_H(n);
  for (std::size_t g = 0; g < space.num_generators(); ++g) {
    const Rational& coeff = v.raw()[g];
    if (coeff == 0) continue;
    const auto& gen = space.generator(g);
    const int r = gen.x_power;
    const int s = K - r;
    for (const HeckeQuad& h : quads) {
      long u2 = h.a * gen.u + h.c * gen.v;
      long v2 = h.b * gen.u + h.d * gen.v;
      auto base = space.generator_index(0, u2, v2);
      if (!base) continue;  // degenerate image dropped
      // (a x + b y)^r (c x + d y)^s expanded over the monomial basis.
      for (int j1 = 0; j1 <= r; ++j1) {
        Integer f1 = binomial(r, j1) * integer_pow(Integer(h.a), j1) *
                     integer_pow(Integer(h.b), r - j1);
        if (f1 == 0) continue;
        for (int j2 = 0; j2 <= s; ++j2) {
          Integer f2 = binomial(s, j2) * integer_pow(Integer(h.c), j2) *
                       integer_pow(Integer(h.d), s - j2);
          if (f2 == 0) continue;
          auto idx = space.generator_index(j1 + j2, u2, v2);
          raw[*idx] += coeff * Rational(f1 * f2);
        }
      }
    }
  }
  return SymbolVector(space, std::move(raw));
}

SymbolVector epsilon_diamond(const SymbolVector& v, long p) {
  const SymbolSpace& space = v.space();
  const int l = space.level();
  long residue = mod_l(p, l);
  if (std::gcd(residue, static_cast<long>(l)) != 1)
    throw std::invalid_argument("relabeling index must be invertible mod the level");
  std::vector<Rational> raw(space.num_generators(), Rational(0));
  for (std::size_t g = 0; g < space.num_generators(); ++g) {
    const Rational& c = v.raw()[g];
    if (c == 0) continue;
    const auto& gen = space.generator(g);
    auto idx = space.generator_index(gen.x_power, p * gen.u, p * gen.v);
    raw[*idx] += c;
  }
  return SymbolVector(space, std::move(raw));
}

QSeries mu_image(int l, int r_exp, int s_exp, long m, long n, int N) {
  long g = std::gcd(std::gcd(std::abs(m), std::abs(n)), static_cast<long>(l));
  if (g != 1) return QSeries(l, r_exp + s_exp + 2, N);
  QSeries left = tilde_s(l, mod_l(m, l), s_exp + 1, N);
  QSeries right = tilde_s(l, mod_l(n, l), r_exp + 1, N);
  return (left * right) * sign_pow(s_exp);
}

QSeries mu_image(const SymbolVector& v, int N) {
  const SymbolSpace& space = v.space();
  const int K = space.weight() - 2;
  QSeries out(space.level(), space.weight(), N);
  for (std::size_t g = 0; g < space.num_generators(); ++g) {
    const Rational& c = v.raw()[g];
    if (c == 0) continue;
    const auto& gen = space.generator(g);
    out = out + scale(c, mu_image(space.level(), gen.x_power, K - gen.x_power,
                                  gen.u, gen.v, N));
  }
  return out;
}

}  // namespace toric
