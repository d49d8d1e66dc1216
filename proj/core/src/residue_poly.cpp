#include <toric/residue_poly.hpp>

#include <toric/arith.hpp>

#include <stdexcept>

namespace toric {

namespace {

int normalize_residue(long value, int modulus) {
  long r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

Rational frac(long numerator, long denominator) {
  return Rational(Integer(numerator)) / Rational(Integer(denominator));
}

}  // namespace

ModLPoly1::ModLPoly1(int modulus) : modulus_(modulus), branches_(modulus) {
  if (modulus <= 0) throw std::invalid_argument("ModLPoly1: modulus must be positive");
}

const Poly& ModLPoly1::branch(int residue) const {
  return branches_[normalize_residue(residue, modulus_)];
}

void ModLPoly1::set_branch(int residue, const Poly& p) {
  branches_[normalize_residue(residue, modulus_)] = p;
}

Rational ModLPoly1::eval(long m) const {
  return branches_[normalize_residue(m, modulus_)](Rational(Integer(m)));
}

bool ModLPoly1::is_zero() const {
  for (const auto& b : branches_) {
    if (!b.is_zero()) return false;
  }
  return true;
}

std::size_t ModLPoly1::max_degree() const {
  std::size_t deg = 0;
  for (const auto& b : branches_) deg = std::max(deg, b.degree());
  return deg;
}

ModLPoly1 ModLPoly1::operator+(const ModLPoly1& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("ModLPoly1::+: modulus mismatch");
  ModLPoly1 out(modulus_);
  for (int r = 0; r < modulus_; ++r) out.branches_[r] = branches_[r] + other.branches_[r];
  return out;
}

ModLPoly1 ModLPoly1::operator*(const Rational& scalar) const {
  ModLPoly1 out(modulus_);
  for (int r = 0; r < modulus_; ++r) out.branches_[r] = branches_[r] * scalar;
  return out;
}

bool ModLPoly1::operator==(const ModLPoly1& other) const {
  return modulus_ == other.modulus_ && branches_ == other.branches_;
}

ModLPoly2::ModLPoly2(int modulus) : modulus_(modulus), branches_(modulus * modulus) {
  if (modulus <= 0) throw std::invalid_argument("ModLPoly2: modulus must be positive");
}

const Poly2& ModLPoly2::branch(int r1, int r2) const {
  return branches_[normalize_residue(r1, modulus_) * modulus_ + normalize_residue(r2, modulus_)];
}

void ModLPoly2::set_branch(int r1, int r2, const Poly2& p) {
  branches_[normalize_residue(r1, modulus_) * modulus_ + normalize_residue(r2, modulus_)] = p;
}

Rational ModLPoly2::eval(long n1, long n2) const {
  return branch(normalize_residue(n1, modulus_), normalize_residue(n2, modulus_))(
      Rational(Integer(n1)), Rational(Integer(n2)));
}

bool ModLPoly2::is_zero() const {
  for (const auto& b : branches_) {
    if (!b.is_zero()) return false;
  }
  return true;
}

std::size_t ModLPoly2::max_degree() const {
  std::size_t deg = 0;
  for (const auto& b : branches_) deg = std::max(deg, b.total_degree());
  return deg;
}

ModLPoly2 ModLPoly2::operator+(const ModLPoly2& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("ModLPoly2::+: modulus mismatch");
  ModLPoly2 out(modulus_);
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    out.branches_[i] = branches_[i] + other.branches_[i];
  }
  return out;
}

ModLPoly2 ModLPoly2::operator*(const Rational& scalar) const {
  ModLPoly2 out(modulus_);
  for (std::size_t i = 0; i < branches_.size(); ++i) out.branches_[i] = branches_[i] * scalar;
  return out;
}

ModLPoly1 r_basis(int a, int k, int l) {
  if (k < 0) throw std::invalid_argument("r_basis: power must be nonnegative");
  ModLPoly1 out(l);
  const int plus_residue = normalize_residue(a, l);
  const int minus_residue = normalize_residue(-a, l);
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  const Poly power = Poly::monomial(static_cast<std::size_t>(k), Rational(1));
  if (plus_residue == minus_residue) {
    out.set_branch(plus_residue, power * (Rational(1) - sign));
  } else {
    out.set_branch(plus_residue, power);
    out.set_branch(minus_residue, power * (-sign));
  }
  return out;
}

bool is_odd(const ModLPoly1& h) {
  const int l = h.modulus();
  for (int r = 0; r < l; ++r) {
    if (!(h.branch((l - r) % l).reflected() == h.branch(r) * Rational(-1))) return false;
  }
  return true;
}

bool is_even2(const ModLPoly2& G) {
  const int l = G.modulus();
  for (int r1 = 0; r1 < l; ++r1) {
    for (int r2 = 0; r2 < l; ++r2) {
      if (!(G.branch((l - r1) % l, (l - r2) % l).reflected() == G.branch(r1, r2))) return false;
    }
  }
  return true;
}

ModLPoly1 cone_sum(const ModLPoly2& G, int N) {
  if (N <= 0) throw std::invalid_argument("cone_sum: N must be positive");
  if (!is_even2(G)) throw std::invalid_argument("cone_sum: input is not even");
  const int l = G.modulus();
  const Poly d_poly = Poly::monomial(1, Rational(1));
  const Rational half = frac(1, 2);
  ModLPoly1 out(l);

  for (int rho = 0; rho < l; ++rho) {
    // Half-weight boundary terms G(0, d) and G(N*d, d).
    Poly total = G.branch(0, rho).substitute(Poly(Rational(0)), d_poly) * half +
                 G.branch(normalize_residue(static_cast<long>(N) * rho, l), rho)
                         .substitute(d_poly * Rational(N), d_poly) *
                     half;

    // Interior terms, one input residue class c at a time: n = c' + l*j with
    // c' the smallest positive representative, j = 0 .. J-1, where
    // J = (N*d - 1 - c' - w) / l + 1 counts n in [1, N*d-1] with n = c (mod l);
    // w = (N*rho - 1 - c') mod l makes the division exact for every d = rho
    // (mod l), and the affine formula also returns 0 when the range is empty.
    for (int c = 0; c < l; ++c) {
      const Poly2& branch = G.branch(c, rho);
      if (branch.is_zero()) continue;
      const long c_rep = (c == 0) ? l : c;
      const long w = normalize_residue(static_cast<long>(N) * rho - 1 - c_rep, l);
      const Poly count =
          affine_poly(frac(N, l), Rational(1) - frac(1 + c_rep + w, l));  // J as a function of d

      const std::size_t max_deg = branch.total_degree();
      for (std::size_t i = 0; i <= max_deg; ++i) {
        // Coefficient of n^i as a polynomial in d.
        Poly coeff_in_d;
        for (std::size_t j = 0; j <= max_deg; ++j) {
          const Rational c_ij = branch.coeff(i, j);
          if (c_ij != 0) coeff_in_d.set_coeff(j, c_ij);
        }
        if (coeff_in_d.is_zero()) continue;
        // (c' + l*j)^i expanded, then each j^t summed to S_t(J).
        Poly powers_sum;
        for (std::size_t t = 0; t <= i; ++t) {
          const Rational weight = Rational(binomial(i, t)) *
                                  Rational(integer_pow(c_rep, i - t)) *
                                  Rational(integer_pow(static_cast<long>(l), t));
          if (weight == 0) continue;
          powers_sum = powers_sum + power_sum_poly(static_cast<unsigned>(t)).compose(count) * weight;
        }
        total = total + coeff_in_d * powers_sum;
      }
    }
    out.set_branch(rho, total);
  }

  if (!is_odd(out)) throw std::logic_error("cone_sum: closed form failed the oddness identity");
  return out;
}

std::vector<RBasisTerm> to_tilde_combination(const ModLPoly1& h) {
  if (!is_odd(h)) throw std::invalid_argument("to_tilde_combination: input is not odd");
  const int l = h.modulus();
  std::vector<RBasisTerm> terms;
  for (int a = 0; a <= l / 2; ++a) {
    const int partner = (l - a) % l;
    const Poly& branch = h.branch(a);
    if (branch.is_zero()) continue;
    for (std::size_t power = 0; power <= branch.degree(); ++power) {
      Rational c = branch.coeff(power);
      if (c == 0) continue;
      if (a == partner) c /= 2;  // self-paired classes carry the doubled basis value
      terms.push_back({a, static_cast<int>(power) + 1, c});
    }
  }

  // The decomposition is forced; verify it reproduces h exactly.
  ModLPoly1 rebuilt(l);
  for (const auto& term : terms) {
    rebuilt = rebuilt + r_basis(term.a, term.weight - 1, l) * term.coeff;
  }
  if (!(rebuilt == h)) throw std::logic_error("to_tilde_combination: reconstruction mismatch");
  return terms;
}

ModLPoly2 delta_bar(int l, long a, long b, int k) {
  ModLPoly2 out(l);
  const int ra = normalize_residue(a, l);
  const int rb = normalize_residue(b, l);
  const int na = (l - ra) % l;
  const int nb = (l - rb) % l;
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  if (ra == na && rb == nb) {
    out.set_branch(ra, rb, Poly2(Rational(1) + sign));
  } else {
    out.set_branch(ra, rb, Poly2(Rational(1)));
    out.set_branch(na, nb, out.branch(na, nb) + Poly2(sign));
  }
  return out;
}

ModLPoly2 a_weight_function(int l, long u, long v, long p, int r, int s) {
  const ModLPoly2 indicator = delta_bar(l, p * u, p * v, r + s + 2);
  const Poly2 monomial = Poly2::monomial(static_cast<std::size_t>(s), static_cast<std::size_t>(r),
                                         (s % 2 == 0) ? Rational(1) : Rational(-1));
  ModLPoly2 out(l);
  for (int r1 = 0; r1 < l; ++r1) {
    for (int r2 = 0; r2 < l; ++r2) {
      out.set_branch(r1, r2, indicator.branch(r1, r2) * monomial);
    }
  }
  return out;
}

}  // namespace toric
