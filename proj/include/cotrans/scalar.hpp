#pragma once

#include <concepts>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cotrans {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "n" or "n/d" with an optional leading '-' on n.
  static Rational parse(std::string_view text);

  static Rational zero() { return {}; }
  static Rational one() { return Rational(1L); }

  [[nodiscard]] mpz_class num() const { return value_.get_num(); }
  [[nodiscard]] mpz_class den() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] const mpq_class& get() const { return value_; }

  // Always "num/den", integers included.
  [[nodiscard]] std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Element of the prime field of order 2^61 - 1, stored reduced.
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;
  explicit constexpr Fp(std::uint64_t value) : value_(reduce64(value)) {}

  static constexpr Fp zero() { return Fp(); }
  static constexpr Fp one() { return Fp(1); }
  static Fp from_int(long value);
  static Fp from_integer(const mpz_class& value);
  // Image of a rational under the reduction map; throws DivisionByZero when
  // the denominator vanishes mod p.
  static Fp from_rational(const Rational& value);

  [[nodiscard]] constexpr std::uint64_t value() const { return value_; }
  [[nodiscard]] constexpr bool is_zero() const { return value_ == 0; }
  [[nodiscard]] Fp pow(std::uint64_t exponent) const;
  [[nodiscard]] Fp inverse() const;
  [[nodiscard]] std::string str() const { return std::to_string(value_); }

  constexpr Fp operator-() const { return Fp(value_ == 0 ? 0 : kModulus - value_); }
  constexpr Fp& operator+=(Fp o) {
    value_ += o.value_;
    if (value_ >= kModulus) value_ -= kModulus;
    return *this;
  }
  constexpr Fp& operator-=(Fp o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + kModulus - o.value_;
    return *this;
  }
  constexpr Fp& operator*=(Fp o) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(value_) * o.value_;
    std::uint64_t folded = static_cast<std::uint64_t>(prod & kModulus) +
                           static_cast<std::uint64_t>(prod >> 61);
    if (folded >= kModulus) folded -= kModulus;
    value_ = folded;
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend constexpr bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

 private:
  static constexpr std::uint64_t reduce64(std::uint64_t v) {
    v = (v & kModulus) + (v >> 61);
    return v >= kModulus ? v - kModulus : v;
  }
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

template <class F>
concept Field = requires(F a, F b) {
  { F::zero() } -> std::convertible_to<F>;
  { F::one() } -> std::convertible_to<F>;
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <class F>
constexpr std::string_view field_name();
template <>
constexpr std::string_view field_name<Rational>() { return "rational"; }
template <>
constexpr std::string_view field_name<Fp>() { return "fp"; }

}  // namespace cotrans
