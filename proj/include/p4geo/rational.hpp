#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>

namespace p4geo {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with positive
/// denominator.  No floating point is used anywhere in the library.
class Rational {
public:
  struct no_normalize {};

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(const Int& n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(Int n, Int d, no_normalize) : num_(std::move(n)), den_(std::move(d)) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Largest integer <= *this.
  Int floor() const {
    if (den_ == 1) return num_;
    Int q = num_ / den_;
    if (num_ < 0) --q;  // cpp_int division truncates toward zero
    return q;
  }

  friend Rational operator-(const Rational& x) {
    return Rational(-x.num_, x.den_, no_normalize());
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
      return Rational(a.num_ + b.num_, 1, no_normalize());
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
      return Rational(a.num_ - b.num_, 1, no_normalize());
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
      return Rational(a.num_ * b.num_, 1, no_normalize());
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  // Denominators are positive, so cross-multiplication preserves order.
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) return a.num_ < b.num_;
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Renders "p/q", or just "p" when the value is an integer.  Never decimals.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Parses "p" or "p/q" (exact, no decimals accepted).
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Int(s));
      Int n(s.substr(0, slash));
      Int d(s.substr(slash + 1));
      if (d.is_zero()) throw std::invalid_argument("zero denominator");
      return Rational(n, d);
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == 1) return;
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;  // > 0
};

}  // namespace p4geo
