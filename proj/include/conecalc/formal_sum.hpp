#ifndef CONECALC_FORMAL_SUM_HPP
#define CONECALC_FORMAL_SUM_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "conecalc/rational.hpp"

namespace conecalc {

/// Commutative monomial over named generators; sparse exponent map, absent
/// generator means exponent zero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial gen(const std::string& name, int exp = 1);

  int exponent(const std::string& g) const;
  const std::map<std::string, int>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial pow(int e) const;

  bool divides(const Monomial& m) const;
  /// pre: d divides *this
  Monomial quotient_by(const Monomial& d) const;

  auto operator<=>(const Monomial&) const = default;

  std::string str() const;  // "h2^2*h1", "1" for the empty monomial

 private:
  std::map<std::string, int> exps_;
};

/// Formal linear combination of monomials with exact rational coefficients.
/// Canonical: zero coefficients are never stored.
class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(Rational constant);
  FormalSum(const Monomial& m, Rational c = Rational(1));

  static FormalSum zero() { return FormalSum(); }
  static FormalSum one() { return FormalSum(Rational(1)); }
  static FormalSum gen(const std::string& name, int exp = 1) {
    return FormalSum(Monomial::gen(name, exp));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  FormalSum operator-() const;
  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

  FormalSum& operator*=(const Rational& c);
  friend FormalSum operator*(FormalSum a, const Rational& c) { return a *= c; }
  friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }

  /// Product in the free commutative algebra (no rewriting).
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

  bool operator==(const FormalSum&) const = default;

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// One rewrite step: any monomial divisible by `pattern` has the pattern
/// factor replaced by `replacement`. Every rule used in this project strictly
/// drops a monomial ordering measure (truncations to zero, or substitutions
/// into smaller powers of the pattern's lead generator), so rewriting
/// terminates.
struct RewriteRule {
  Monomial pattern;
  FormalSum replacement;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<RewriteRule> rules)
      : rules_(std::move(rules)) {}

  void add_rule(Monomial pattern, FormalSum replacement);
  const std::vector<RewriteRule>& rules() const { return rules_; }

  FormalSum normal_form(const FormalSum& s) const;
  /// Same fixed point, but rules are tried in the given order; used by the
  /// confluence property tests.
  FormalSum normal_form(const FormalSum& s,
                        const std::vector<std::size_t>& rule_order) const;

 private:
  std::vector<RewriteRule> rules_;
};

/// Named generators with declared degrees; the validation context for ring
/// operations.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::vector<std::pair<std::string, int>> gens);

  bool contains(const std::string& name) const;
  int degree_of(const std::string& name) const;
  const std::vector<std::pair<std::string, int>>& gens() const { return gens_; }

  /// Throws DomainError if the sum mentions a generator outside this set.
  void validate(const FormalSum& s) const;

  int degree(const Monomial& m) const;
  /// Degree if homogeneous (zero sum reports degree -1), else nullopt-like
  /// throw-free: returns false.
  bool homogeneous_degree(const FormalSum& s, int& deg_out) const;

 private:
  std::vector<std::pair<std::string, int>> gens_;
  std::map<std::string, int> degree_by_name_;
};

/// A free commutative algebra truncated by a rewrite system: the working
/// representation of every quotient ring in this project.
class QuotientRing {
 public:
  QuotientRing() = default;
  QuotientRing(GeneratorSet gens, RewriteSystem rw)
      : gens_(std::move(gens)), rw_(std::move(rw)) {}

  const GeneratorSet& generators() const { return gens_; }
  const RewriteSystem& rewrites() const { return rw_; }

  FormalSum add(const FormalSum& a, const FormalSum& b) const;
  FormalSum mul(const FormalSum& a, const FormalSum& b) const;
  FormalSum normal_form(const FormalSum& a) const;
  FormalSum pow(const FormalSum& a, int e) const;

 private:
  GeneratorSet gens_;
  RewriteSystem rw_;
};

/// Truncated expansion of (1+g)^{-m} modulo g^t:
///   sum_{j<t} binom(m-1+j, j) (-g)^j.
FormalSum inv_one_plus(const std::string& g, int m, int t);

}  // namespace conecalc

#endif
