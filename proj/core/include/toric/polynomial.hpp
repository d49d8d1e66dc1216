#pragma once

// Dense polynomials over Rational in one and two variables: the workhorses
// behind residue-branch functions, Faulhaber summation, and interpolation.

#include <toric/rational.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace toric {

// Univariate polynomial, dense coefficient list (index = power).
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  static Poly monomial(std::size_t degree, const Rational& coefficient);

  bool is_zero() const;
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const;
  Rational coeff(std::size_t power) const;
  void set_coeff(std::size_t power, const Rational& value);

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& scalar) const;
  Poly operator-() const;
  bool operator==(const Poly& other) const;

  Rational operator()(const Rational& x) const;

  // p(inner(x)) by Horner over polynomials.
  Poly compose(const Poly& inner) const;

  // p(-x): sign-flip the odd coefficients.
  Poly reflected() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // no trailing zeros
};

// Affine polynomial a*x + b as a Poly.
Poly affine_poly(const Rational& a, const Rational& b);

// Bernoulli polynomial B_k as a symbolic Poly in its variable.
Poly bernoulli_poly(unsigned k);

// Power-sum closed form: S_t(X) = sum_{j=0}^{X-1} j^t as a polynomial in X,
// i.e. (B_{t+1}(X) - B_{t+1}) / (t+1).
Poly power_sum_poly(unsigned t);

// Unique polynomial of degree < points.size() through the given
// (x, value) samples (Lagrange form). The x values must be distinct.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// Bivariate polynomial, dense grid coeff(i, j) * x^i * y^j.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(const Rational& constant);
  static Poly2 monomial(std::size_t dx, std::size_t dy, const Rational& coefficient);

  bool is_zero() const;
  // Max total degree among nonzero terms (0 for the zero polynomial).
  std::size_t total_degree() const;
  Rational coeff(std::size_t dx, std::size_t dy) const;
  void set_coeff(std::size_t dx, std::size_t dy, const Rational& value);

  Poly2 operator+(const Poly2& other) const;
  Poly2 operator-(const Poly2& other) const;
  Poly2 operator*(const Poly2& other) const;
  Poly2 operator*(const Rational& scalar) const;
  bool operator==(const Poly2& other) const;

  Rational operator()(const Rational& x, const Rational& y) const;

  // p(-x, -y): sign-flip terms of odd total degree.
  Poly2 reflected() const;

  // Substitute univariate polynomials for both variables.
  Poly substitute(const Poly& x_poly, const Poly& y_poly) const;

 private:
  void trim();
  // coeffs_[i][j] multiplies x^i y^j; rows may have trailing zeros trimmed.
  std::vector<std::vector<Rational>> coeffs_;
};

}  // namespace toric
