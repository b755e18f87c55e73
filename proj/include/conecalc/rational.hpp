#ifndef CONECALC_RATIONAL_HPP
#define CONECALC_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include "conecalc/bigint.hpp"

namespace conecalc {

/// Exact rational number; always reduced, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  /// The integer value; throws if the denominator is not 1.
  const BigInt& as_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  BigInt num_;
  BigInt den_;
  void reduce();
};

}  // namespace conecalc

#endif
