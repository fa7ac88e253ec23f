#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace linkhom {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq; adds parsing of the two literal forms
/// accepted on the command line ("p/q" and base-10 decimals such as "0.125"
/// or "-2.5e-3") and the canonical "p/q" rendering used in every report.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, unsigned long den);
  explicit Rational(const mpq_class& value);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q", an integer, or a decimal literal. Throws linkhom::Error
  /// (kind input, code "bad_rational") on anything else or a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  // Always "p/q", including integers ("2/1") and zero ("0/1").
  std::string to_string() const;

  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace linkhom
