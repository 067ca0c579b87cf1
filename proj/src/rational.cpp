#include "cimset/rational.hpp"

#include <cmath>

#include "cimset/errors.hpp"

namespace cimset {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw FormatError("empty rational literal");
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
      throw FormatError("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  mpz_class numerator;
  if (digits.empty() || digits == "-" || numerator.set_str(digits, 10) != 0)
    throw FormatError("not a rational number: '" + text + "'");
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, text.size() - dot - 1);
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite value to a rational");
  Rational q(x);
  return q;
}

}  // namespace cimset
