#include "ledin/polynomial.hpp"

#include <algorithm>

namespace ledin {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Scalar& c, unsigned degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::shifted_power(const Scalar& shift, unsigned m) {
  std::vector<Scalar> coeffs(m + 1);
  for (unsigned d = 0; d <= m; ++d) {
    coeffs[d] = Scalar(binomial(m, d)) * pow(shift, static_cast<long>(m - d));
  }
  return Polynomial(std::move(coeffs));
}

Scalar Polynomial::operator()(const Scalar& n) const {
  Scalar value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value *= n;
    value += *it;
  }
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] -= rhs.coeffs_[d];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

Polynomial& Polynomial::add_term(const Scalar& c, unsigned degree) {
  if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, Scalar(0));
  coeffs_[degree] += c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Scalar> coeffs(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
  std::string out = "[";
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d != 0) out += ", ";
    out += ledin::to_string(coeffs_[d]);
  }
  return out + "]";
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace ledin
