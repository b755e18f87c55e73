#include "conecalc/bigint.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "conecalc/error.hpp"

namespace conecalc {

namespace {

constexpr uint64_t kBase = uint64_t(1) << 32;

std::size_t bit_length(const std::vector<uint32_t>& mag) {
  if (mag.empty()) return 0;
  uint32_t top = mag.back();
  std::size_t bits = 0;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return 32 * (mag.size() - 1) + bits;
}

bool get_bit(const std::vector<uint32_t>& mag, std::size_t i) {
  return (mag[i / 32] >> (i % 32)) & 1u;
}

void shift_left_one(std::vector<uint32_t>& mag) {
  uint32_t carry = 0;
  for (auto& limb : mag) {
    uint32_t next = limb >> 31;
    limb = (limb << 1) | carry;
    carry = next;
  }
  if (carry != 0) mag.push_back(carry);
}

// pre: |a| >= |b|; in-place a -= b on magnitudes
void sub_mag_inplace(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int64_t cur = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
    if (cur < 0) {
      cur += int64_t(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = uint32_t(cur);
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// divide magnitude by a small positive value, return remainder
uint32_t divmod_small(std::vector<uint32_t>& mag, uint32_t d) {
  uint64_t rem = 0;
  for (std::size_t i = mag.size(); i-- > 0;) {
    uint64_t cur = (rem << 32) | mag[i];
    mag[i] = uint32_t(cur / d);
    rem = cur % d;
  }
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  return uint32_t(rem);
}

void mul_small_add(std::vector<uint32_t>& mag, uint32_t mul, uint32_t add) {
  uint64_t carry = add;
  for (auto& limb : mag) {
    uint64_t cur = uint64_t(limb) * mul + carry;
    limb = uint32_t(cur);
    carry = cur >> 32;
  }
  while (carry != 0) {
    mag.push_back(uint32_t(carry));
    carry >>= 32;
  }
}

}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid overflow on LLONG_MIN
  unsigned long long mag =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
            : static_cast<unsigned long long>(v);
  while (mag != 0) {
    limbs_.push_back(uint32_t(mag));
    mag >>= 32;
  }
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw DomainError("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw DomainError("empty integer literal");
  BigInt out;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9')
      throw DomainError("invalid digit in integer literal: " +
                        std::string(s));
    mul_small_add(out.limbs_, 10, uint32_t(c - '0'));
  }
  out.sign_ = out.limbs_.empty() ? 0 : (neg ? -1 : 1);
  return out;
}

bool BigInt::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a,
                    const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    uint64_t cur = carry;
    if (i < a.size()) cur += a[i];
    if (i < b.size()) cur += b[i];
    out.push_back(uint32_t(cur));
    carry = cur >> 32;
  }
  if (carry != 0) out.push_back(uint32_t(carry));
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out = a;
  sub_mag_inplace(out, b);
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = uint64_t(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = uint32_t(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      uint64_t cur = uint64_t(out[k]) + carry;
      out[k] = uint32_t(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    limbs_ = add_mag(limbs_, o.limbs_);
    return *this;
  }
  int c = cmp_mag(limbs_, o.limbs_);
  if (c == 0) {
    sign_ = 0;
    limbs_.clear();
  } else if (c > 0) {
    limbs_ = sub_mag(limbs_, o.limbs_);
  } else {
    limbs_ = sub_mag(o.limbs_, limbs_);
    sign_ = o.sign_;
  }
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  sign_ *= o.sign_;
  limbs_ = mul_mag(limbs_, o.limbs_);
  if (limbs_.empty()) sign_ = 0;
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.sign_ == 0) throw DomainError("division by zero");
  if (cmp_mag(a.limbs_, b.limbs_) < 0) {
    q = BigInt();
    r = a;
    return;
  }
  std::vector<uint32_t> qm((a.limbs_.size()), 0);
  std::vector<uint32_t> rm;
  const std::size_t bits = bit_length(a.limbs_);
  for (std::size_t i = bits; i-- > 0;) {
    shift_left_one(rm);
    if (get_bit(a.limbs_, i)) {
      if (rm.empty())
        rm.push_back(1);
      else
        rm[0] |= 1u;
    }
    if (cmp_mag(rm, b.limbs_) >= 0) {
      sub_mag_inplace(rm, b.limbs_);
      qm[i / 32] |= uint32_t(1) << (i % 32);
    }
  }
  BigInt qq, rr;
  qq.limbs_ = std::move(qm);
  qq.trim();
  qq.sign_ = qq.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  rr.limbs_ = std::move(rm);
  rr.trim();
  rr.sign_ = rr.limbs_.empty() ? 0 : a.sign_;
  q = std::move(qq);
  r = std::move(rr);
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = q;
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = r;
}

BigInt BigInt::divide_exact(const BigInt& b) const {
  BigInt q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw DomainError("inexact integer division");
  return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = a.limbs_.empty() ? 0 : 1;
  b.sign_ = b.limbs_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(unsigned e) const {
  BigInt out(1), base = *this;
  while (e != 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_)
    return a.sign_ < b.sign_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(a.limbs_, b.limbs_) * (a.sign_ == 0 ? 0 : a.sign_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    uint32_t chunk = divmod_small(mag, 1000000000u);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(char('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

long long BigInt::to_ll() const {
  if (sign_ == 0) return 0;
  if (limbs_.size() > 2) throw DomainError("BigInt does not fit in long long");
  unsigned long long mag = limbs_[0];
  if (limbs_.size() == 2) mag |= static_cast<unsigned long long>(limbs_[1]) << 32;
  if (sign_ > 0) {
    if (mag > static_cast<unsigned long long>(
                  std::numeric_limits<long long>::max()))
      throw DomainError("BigInt does not fit in long long");
    return static_cast<long long>(mag);
  }
  if (mag > static_cast<unsigned long long>(
                std::numeric_limits<long long>::max()) +
                1ull)
    throw DomainError("BigInt does not fit in long long");
  return -static_cast<long long>(mag - 1) - 1;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.str();
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt out(1);
  for (long long i = 1; i <= k; ++i) {
    out *= BigInt(n - k + i);
    out = out.divide_exact(BigInt(i));
  }
  return out;
}

}  // namespace conecalc
