#include <toric/qseries.hpp>

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace toric {

QSeries::QSeries(int level, int weight, int truncation)
    : level_(level), weight_(weight), truncation_(truncation) {
  if (level <= 0) throw std::invalid_argument("QSeries: level must be positive");
  if (truncation < 0) throw std::invalid_argument("QSeries: truncation must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

const Rational& QSeries::coeff(int n) const {
  if (n < 0 || n > truncation_) throw std::out_of_range("QSeries::coeff: index out of range");
  return coeffs_[static_cast<std::size_t>(n)];
}

void QSeries::set_coeff(int n, const Rational& value) {
  if (n < 0 || n > truncation_) throw std::out_of_range("QSeries::set_coeff: index out of range");
  coeffs_[static_cast<std::size_t>(n)] = value;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

QSeries QSeries::operator+(const QSeries& other) const {
  const int n = std::min(truncation_, other.truncation_);
  QSeries out(std::lcm(level_, other.level_), weight_, n);
  for (int i = 0; i <= n; ++i) out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return out;
}

QSeries QSeries::operator-(const QSeries& other) const {
  return *this + other * Rational(-1);
}

QSeries QSeries::operator*(const QSeries& other) const {
  const int n = std::min(truncation_, other.truncation_);
  QSeries out(std::lcm(level_, other.level_), weight_ + other.weight_, n);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return out;
}

QSeries QSeries::operator*(const Rational& scalar) const {
  QSeries out(*this);
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

bool QSeries::same_coefficients(const QSeries& other) const {
  return truncation_ == other.truncation_ && coeffs_ == other.coeffs_;
}

QSeries QSeries::truncated(int new_truncation) const {
  if (new_truncation > truncation_) {
    throw std::invalid_argument("QSeries::truncated: cannot extend a truncated series");
  }
  QSeries out(level_, weight_, new_truncation);
  for (int i = 0; i <= new_truncation; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

QSeries QSeries::q_derivative() const {
  QSeries out(level_, weight_ + 2, truncation_);
  for (int n = 1; n <= truncation_; ++n) out.coeffs_[n] = coeffs_[n] * Rational(n);
  return out;
}

std::string QSeries::to_display_string() const {
  std::string out;
  auto term_body = [](const Rational& magnitude, int n) {
    std::string body;
    if (n == 0) {
      body = to_string(magnitude);
    } else {
      const std::string q_part = (n == 1) ? "q" : "q^" + std::to_string(n);
      body = (magnitude == 1) ? q_part : to_string(magnitude) + "*" + q_part;
    }
    return body;
  };
  for (int n = 0; n <= truncation_; ++n) {
    const Rational& c = coeffs_[n];
    if (c == 0) continue;
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term_body(abs(c), n);
    } else {
      out += (c < 0 ? " - " : " + ") + term_body(abs(c), n);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::string QSeries::to_json_string() const {
  nlohmann::json j;
  j["level"] = level_;
  j["weight"] = weight_;
  j["truncation"] = truncation_;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(to_string(c));
  j["coeffs"] = coeffs;
  return j.dump();
}

QSeries QSeries::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  QSeries out(j.at("level").get<int>(), j.at("weight").get<int>(), j.at("truncation").get<int>());
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != out.truncation_ + 1) {
    throw std::invalid_argument("QSeries::from_json_string: coefficient count mismatch");
  }
  for (int i = 0; i <= out.truncation_; ++i) {
    out.coeffs_[i] = rational_from_string(coeffs[i].get<std::string>());
  }
  return out;
}

QSeries scale(const Rational& c, const QSeries& f) { return f * c; }

QSeries divisor_sum_series(const ModLPoly1& h, int order) {
  QSeries out(h.modulus(), 0, order);
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      acc += h.eval(d);
      const int partner = n / d;
      if (partner != d) acc += h.eval(partner);
    }
    out.set_coeff(n, acc);
  }
  return out;
}

}  // namespace toric
