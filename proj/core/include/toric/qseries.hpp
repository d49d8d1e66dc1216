#pragma once

// Truncated power series in q with exact rational coefficients. The level
// and weight fields are informational tags used for labeling and sanity
// checks, never for dispatch.

#include <toric/rational.hpp>
#include <toric/residue_poly.hpp>

#include <string>
#include <vector>

namespace toric {

class QSeries {
 public:
  // Zero series holding coefficients for q^0 .. q^truncation inclusive.
  QSeries(int level, int weight, int truncation);

  int level() const { return level_; }
  int weight() const { return weight_; }
  int truncation() const { return truncation_; }

  const Rational& coeff(int n) const;
  void set_coeff(int n, const Rational& value);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;

  // Coefficientwise; result truncation = min of the operands'.
  QSeries operator+(const QSeries& other) const;
  QSeries operator-(const QSeries& other) const;
  // Cauchy product; truncation = min of the operands', weight tags add,
  // level tags combine by lcm.
  QSeries operator*(const QSeries& other) const;
  QSeries operator*(const Rational& scalar) const;

  bool same_coefficients(const QSeries& other) const;

  // Shorten to a smaller truncation order.
  QSeries truncated(int new_truncation) const;

  // D = q d/dq: multiplies the q^n coefficient by n; weight tag += 2.
  QSeries q_derivative() const;

  // Human-readable "c0 + c1*q + c2*q^2 + ..." with zero terms omitted,
  // unit coefficients shortened, and negative terms joined with " - ".
  std::string to_display_string() const;

  // JSON exchange form {"level", "weight", "truncation", "coeffs": ["p/q",...]}.
  std::string to_json_string() const;
  static QSeries from_json_string(const std::string& text);

 private:
  int level_;
  int weight_;
  int truncation_;
  std::vector<Rational> coeffs_;
};

QSeries scale(const Rational& c, const QSeries& f);

// Coefficient of q^D is sum over divisors d of D of h(d), for 1 <= D <= order;
// the constant term is 0. Level tag = modulus of h, weight tag = 0.
QSeries divisor_sum_series(const ModLPoly1& h, int order);

}  // namespace toric
