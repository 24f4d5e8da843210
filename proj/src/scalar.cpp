#include "cotrans/scalar.hpp"

#include <ostream>

#include "cotrans/error.hpp"

namespace cotrans {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::string_view digits = part;
    if (allow_sign && !digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    return mpz_class(std::string(part), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true), mpz_class(1));
  const mpz_class num = parse_int(text.substr(0, slash), true);
  const mpz_class den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Fp Fp::from_int(long value) {
  if (value >= 0) return Fp(static_cast<std::uint64_t>(value));
  // -(value) may overflow for LONG_MIN; go through unsigned negation.
  return -Fp(static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(value));
}

Fp Fp::from_integer(const mpz_class& value) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(kModulus));
  if (r < 0) r += static_cast<unsigned long>(kModulus);
  return Fp(static_cast<std::uint64_t>(r.get_ui()));
}

Fp Fp::from_rational(const Rational& value) {
  const Fp den = from_integer(value.den());
  if (den.is_zero()) throw DivisionByZero("denominator vanishes modulo 2^61-1");
  return from_integer(value.num()) * den.inverse();
}

Fp Fp::pow(std::uint64_t exponent) const {
  Fp base = *this;
  Fp acc = one();
  while (exponent != 0) {
    if (exponent & 1U) acc *= base;
    base *= base;
    exponent >>= 1U;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in F_p");
  return pow(kModulus - 2);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

}  // namespace cotrans
