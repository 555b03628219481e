#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace percolab {

/// Exact fraction with canonical form: lowest terms, denominator > 0.
/// All density quantities in the library are carried as Rational; floating
/// point only appears in convenience output fields.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den) { assign(num, den); }
  constexpr Rational(long long num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(a.num_ * (__int128)b.den_ + (__int128)b.num_ * a.den_),
                    checked((__int128)a.den_ * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(checked(a.num_ * (__int128)b.den_ - (__int128)b.num_ * a.den_),
                    checked((__int128)a.den_ * b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked((__int128)a.num_ * b.num_), checked((__int128)a.den_ * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(checked((__int128)a.num_ * b.den_), checked((__int128)a.den_ * b.num_));
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return (double)num_ / (double)den_; }

  /// Canonical "num/den" form, e.g. "5/2", "2/1", "-3/4".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  void assign(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
  }
  static long long checked(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("Rational: overflow");
    return (long long)x;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace percolab
