#ifndef DYNR_RATIONAL_HPP
#define DYNR_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "dynr/errors.hpp"

namespace dynr {

/// Exact rational arithmetic over a checked 128-bit integer.
///
/// Every operation normalizes (gcd-reduced, positive denominator) and throws
/// OverflowError instead of wrapping, so a passing exact check really is exact.
/// The parameter ranges used by the identity checks (indices <= 10, Bernoulli
/// numbers through B_24, series orders <= 24) fit with ample headroom.
class Rational {
public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational from_int128(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return from_int128(-num_, den_); }

  Rational operator+(const Rational& o) const {
    Int g = gcd(den_, o.den_);
    Int a = checked_mul(num_, o.den_ / g);
    Int b = checked_mul(o.num_, den_ / g);
    return from_int128(checked_add(a, b), checked_mul(den_, o.den_ / g));
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }

  Rational operator*(const Rational& o) const {
    Int g1 = gcd(abs_(num_), o.den_);
    Int g2 = gcd(abs_(o.num_), den_);
    return from_int128(checked_mul(num_ / g1, o.num_ / g2),
                       checked_mul(den_ / g2, o.den_ / g1));
  }

  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw OverflowError("rational division by zero");
    return *this * from_int128(o.den_, o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return (*this - o).num_ < 0; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    std::string s = int128_to_string(num_);
    if (den_ != 1) s += "/" + int128_to_string(den_);
    return s;
  }

  static std::string int128_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
      s += static_cast<char>('0' + static_cast<int>(u % 10));
      u /= 10;
    }
    if (neg) s += '-';
    return std::string(s.rbegin(), s.rend());
  }

  /// n! as an exact rational; throws OverflowError past the 128-bit range (n <= 33).
  static Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
  }

  /// Binomial coefficient C(n, k); zero outside the Pascal triangle.
  static Rational binomial(long long n, long long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long long i = 0; i < k; ++i) {
      r *= Rational(n - i);
      r /= Rational(i + 1);
    }
    return r;
  }

private:
  Int num_, den_;

  static Int abs_(Int v) { return v < 0 ? -v : v; }

  static Int gcd(Int a, Int b) {
    a = abs_(a);
    b = abs_(b);
    while (b) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational add overflow");
    return r;
  }

  static Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational mul overflow");
    return r;
  }

  void normalize() {
    if (den_ == 0) throw OverflowError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }
};

} // namespace dynr

#endif
