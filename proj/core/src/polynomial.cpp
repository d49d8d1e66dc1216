#include <toric/polynomial.hpp>

#include <toric/arith.hpp>

#include <stdexcept>

namespace toric {

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(std::size_t degree, const Rational& coefficient) {
  Poly p;
  if (coefficient != 0) {
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = coefficient;
  }
  return p;
}

bool Poly::is_zero() const { return coeffs_.empty(); }

std::size_t Poly::degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

Rational Poly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

void Poly::set_coeff(std::size_t power, const Rational& value) {
  if (power >= coeffs_.size()) {
    if (value == 0) return;
    coeffs_.resize(power + 1, Rational(0));
  }
  coeffs_[power] = value;
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& other) const {
  Poly out;
  out.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  Poly out;
  if (is_zero() || other.is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Poly Poly::operator*(const Rational& scalar) const {
  Poly out;
  if (scalar == 0) return out;
  out.coeffs_ = coeffs_;
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

bool Poly::operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * inner + Poly(coeffs_[i]);
  }
  return acc;
}

Poly Poly::reflected() const {
  Poly out(*this);
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

Poly affine_poly(const Rational& a, const Rational& b) {
  Poly p(b);
  if (a != 0) p.set_coeff(1, a);
  return p;
}

Poly bernoulli_poly(unsigned k) {
  Poly p;
  for (unsigned j = 0; j <= k; ++j) {
    Rational c = Rational(binomial(k, j)) * bernoulli_number(j);
    if (c != 0) p.set_coeff(k - j, c);
  }
  return p;
}

Poly power_sum_poly(unsigned t) {
  Poly numerator = bernoulli_poly(t + 1) - Poly(bernoulli_number(t + 1));
  return numerator * Rational(Integer(1), Integer(t + 1));
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  Poly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly term(points[i].second);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      Rational gap = points[i].first - points[j].first;
      if (gap == 0) throw std::invalid_argument("interpolate: duplicate x value");
      term = term * affine_poly(Rational(1) / gap, -points[j].first / gap);
    }
    acc = acc + term;
  }
  return acc;
}

Poly2::Poly2(const Rational& constant) {
  if (constant != 0) coeffs_.push_back({constant});
}

Poly2 Poly2::monomial(std::size_t dx, std::size_t dy, const Rational& coefficient) {
  Poly2 p;
  if (coefficient != 0) {
    p.coeffs_.resize(dx + 1);
    p.coeffs_[dx].assign(dy + 1, Rational(0));
    p.coeffs_[dx][dy] = coefficient;
  }
  return p;
}

bool Poly2::is_zero() const { return coeffs_.empty(); }

std::size_t Poly2::total_degree() const {
  std::size_t deg = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      if (coeffs_[i][j] != 0) deg = std::max(deg, i + j);
    }
  }
  return deg;
}

Rational Poly2::coeff(std::size_t dx, std::size_t dy) const {
  if (dx >= coeffs_.size() || dy >= coeffs_[dx].size()) return Rational(0);
  return coeffs_[dx][dy];
}

void Poly2::set_coeff(std::size_t dx, std::size_t dy, const Rational& value) {
  if (value == 0 && (dx >= coeffs_.size() || dy >= coeffs_[dx].size())) return;
  if (dx >= coeffs_.size()) coeffs_.resize(dx + 1);
  if (dy >= coeffs_[dx].size()) coeffs_[dx].resize(dy + 1, Rational(0));
  coeffs_[dx][dy] = value;
  trim();
}

void Poly2::trim() {
  for (auto& row : coeffs_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

Poly2 Poly2::operator+(const Poly2& other) const {
  Poly2 out(*this);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_[i].size(); ++j) {
      if (other.coeffs_[i][j] == 0) continue;
      out.set_coeff(i, j, out.coeff(i, j) + other.coeffs_[i][j]);
    }
  }
  out.trim();
  return out;
}

Poly2 Poly2::operator-(const Poly2& other) const { return *this + other * Rational(-1); }

Poly2 Poly2::operator*(const Poly2& other) const {
  Poly2 out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      if (coeffs_[i][j] == 0) continue;
      for (std::size_t a = 0; a < other.coeffs_.size(); ++a) {
        for (std::size_t b = 0; b < other.coeffs_[a].size(); ++b) {
          if (other.coeffs_[a][b] == 0) continue;
          out.set_coeff(i + a, j + b, out.coeff(i + a, j + b) + coeffs_[i][j] * other.coeffs_[a][b]);
        }
      }
    }
  }
  out.trim();
  return out;
}

Poly2 Poly2::operator*(const Rational& scalar) const {
  Poly2 out;
  if (scalar == 0) return out;
  out.coeffs_ = coeffs_;
  for (auto& row : out.coeffs_) {
    for (auto& c : row) c *= scalar;
  }
  return out;
}

bool Poly2::operator==(const Poly2& other) const { return (*this - other).is_zero(); }

Rational Poly2::operator()(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rational row_value(0);
    for (std::size_t j = coeffs_[i].size(); j-- > 0;) {
      row_value = row_value * y + coeffs_[i][j];
    }
    acc = acc * x + row_value;
  }
  return acc;
}

Poly2 Poly2::reflected() const {
  Poly2 out(*this);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < out.coeffs_[i].size(); ++j) {
      if ((i + j) % 2 == 1) out.coeffs_[i][j] = -out.coeffs_[i][j];
    }
  }
  return out;
}

Poly Poly2::substitute(const Poly& x_poly, const Poly& y_poly) const {
  Poly acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Poly row_value;
    for (std::size_t j = coeffs_[i].size(); j-- > 0;) {
      row_value = row_value * y_poly + Poly(coeffs_[i][j]);
    }
    acc = acc * x_poly + row_value;
  }
  return acc;
}

}  // namespace toric
