#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace dirmix {

using BigInt = mpz_class;

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator; no operation rounds.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(make_integer(value)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "p/q", "p", and decimal literals such as "-0.125" or "2.5e-3";
  /// decimals are converted exactly (0.1 is 1/10).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  template <std::integral T>
  static BigInt make_integer(T value) {
    if constexpr (std::is_signed_v<T>) {
      return BigInt(static_cast<long>(value));
    } else {
      return BigInt(static_cast<unsigned long>(value));
    }
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

Rational abs(const Rational& x);

/// x^k with 0^0 = 1.
Rational pow(const Rational& x, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace dirmix
