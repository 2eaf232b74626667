#include "ledin/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "ledin/errors.hpp"

namespace ledin {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw InvalidInput("zero denominator in rational literal '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  Scalar reduced = value;
  reduced.canonicalize();
  if (reduced.get_den() == 1) return reduced.get_num().get_str();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Scalar pow(const Scalar& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    const Scalar inverse = 1 / base;
    return pow(inverse, -exponent);
  }
  Scalar result = 1;
  Scalar square = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= square;
    e >>= 1;
    if (e != 0) square *= square;
  }
  return result;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result = 1;
  Integer square = base;
  while (exponent != 0) {
    if (exponent & 1UL) result *= square;
    exponent >>= 1;
    if (exponent != 0) square *= square;
  }
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace ledin
