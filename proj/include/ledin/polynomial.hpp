#pragma once

#include <string>
#include <vector>

#include "ledin/scalar.hpp"

namespace ledin {

/// Dense polynomial in the upper summation limit n with exact coefficients.
/// coefficients()[d] is the coefficient of n^d. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);

  static Polynomial constant(const Scalar& c);
  /// c * n^degree.
  static Polynomial monomial(const Scalar& c, unsigned degree);
  /// (n + shift)^m expanded by the binomial theorem.
  static Polynomial shifted_power(const Scalar& shift, unsigned m);

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(unsigned d) const { return d < coeffs_.size() ? coeffs_[d] : Scalar(0); }
  Scalar leading_coefficient() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  /// Horner evaluation.
  Scalar operator()(const Scalar& n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& factor);
  /// Adds c * n^degree.
  Polynomial& add_term(const Scalar& c, unsigned degree);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Scalar& factor) { return lhs *= factor; }
  friend Polynomial operator*(const Scalar& factor, Polynomial rhs) { return rhs *= factor; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ascending coefficients, e.g. "[-1, 1]" for n - 1; "[]" for zero.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

}  // namespace ledin
