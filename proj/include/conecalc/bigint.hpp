#ifndef CONECALC_BIGINT_HPP
#define CONECALC_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace conecalc {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Division is bit-serial long division: operands in this project stay well
/// under a few hundred bits, so auditability wins over Knuth's algorithm D.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  /// Truncated division: q rounds toward zero, r has the sign of the
  /// dividend, a == q*b + r.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  /// Exact quotient; throws if the division leaves a remainder.
  BigInt divide_exact(const BigInt& b) const;

  static BigInt gcd(BigInt a, BigInt b);

  BigInt pow(unsigned e) const;

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  std::string str() const;
  /// Throws DomainError if the value does not fit.
  long long to_ll() const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs_;  // little-endian magnitude, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // pre: |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
};

BigInt binomial(long long n, long long k);

}  // namespace conecalc

#endif
