#include "conecalc/formal_sum.hpp"

#include <deque>
#include <sstream>
#include <utility>

#include "conecalc/error.hpp"

namespace conecalc {

Monomial Monomial::gen(const std::string& name, int exp) {
  if (exp < 0) throw DomainError("negative exponent for generator " + name);
  Monomial m;
  if (exp > 0) m.exps_[name] = exp;
  return m;
}

int Monomial::exponent(const std::string& g) const {
  auto it = exps_.find(g);
  return it == exps_.end() ? 0 : it->second;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (const auto& [g, e] : o.exps_) exps_[g] += e;
  return *this;
}

Monomial Monomial::pow(int e) const {
  if (e < 0) throw DomainError("negative monomial power");
  Monomial out;
  for (const auto& [g, x] : exps_)
    if (e > 0) out.exps_[g] = x * e;
  return out;
}

bool Monomial::divides(const Monomial& m) const {
  for (const auto& [g, e] : exps_)
    if (m.exponent(g) < e) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
  Monomial out;
  for (const auto& [g, e] : exps_) {
    int q = e - d.exponent(g);
    if (q < 0) throw DomainError("monomial quotient with negative exponent");
    if (q > 0) out.exps_[g] = q;
  }
  return out;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : exps_) {
    if (!first) os << "*";
    first = false;
    os << g;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

FormalSum::FormalSum(Rational constant) {
  if (!constant.is_zero()) terms_[Monomial::one()] = std::move(constant);
}

FormalSum::FormalSum(const Monomial& m, Rational c) {
  if (!c.is_zero()) terms_[m] = std::move(c);
}

Rational FormalSum::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalSum FormalSum::operator-() const {
  FormalSum out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string FormalSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (m.is_one()) {
      os << a.str();
    } else if (a == Rational(1)) {
      os << m.str();
    } else {
      os << a.str() << "*" << m.str();
    }
  }
  return os.str();
}

void RewriteSystem::add_rule(Monomial pattern, FormalSum replacement) {
  if (pattern.is_one()) throw DomainError("rewrite pattern must not be 1");
  rules_.push_back({std::move(pattern), std::move(replacement)});
}

FormalSum RewriteSystem::normal_form(const FormalSum& s) const {
  std::vector<std::size_t> order(rules_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return normal_form(s, order);
}

FormalSum RewriteSystem::normal_form(
    const FormalSum& s, const std::vector<std::size_t>& rule_order) const {
  FormalSum out;
  std::deque<std::pair<Monomial, Rational>> work(s.terms().begin(),
                                                 s.terms().end());
  // every rule strictly reduces its pattern, so this bound is never hit on
  // a well-formed system
  std::size_t fuel = 1u << 22;
  while (!work.empty()) {
    if (fuel-- == 0)
      throw Error("rewriting did not terminate; the rule set violates the "
                  "descending-measure requirement");
    auto [m, c] = work.front();
    work.pop_front();
    const RewriteRule* hit = nullptr;
    for (std::size_t idx : rule_order) {
      if (rules_.at(idx).pattern.divides(m)) {
        hit = &rules_[idx];
        break;
      }
    }
    if (hit == nullptr) {
      out.add_term(m, c);
      continue;
    }
    Monomial rest = m.quotient_by(hit->pattern);
    for (const auto& [rm, rc] : hit->replacement.terms())
      work.emplace_back(rm * rest, c * rc);
  }
  return out;
}

GeneratorSet::GeneratorSet(std::vector<std::pair<std::string, int>> gens)
    : gens_(std::move(gens)) {
  for (const auto& [name, deg] : gens_) degree_by_name_[name] = deg;
}

bool GeneratorSet::contains(const std::string& name) const {
  return degree_by_name_.count(name) != 0;
}

int GeneratorSet::degree_of(const std::string& name) const {
  auto it = degree_by_name_.find(name);
  if (it == degree_by_name_.end())
    throw DomainError("unknown generator: " + name);
  return it->second;
}

void GeneratorSet::validate(const FormalSum& s) const {
  for (const auto& [m, c] : s.terms())
    for (const auto& [g, e] : m.exponents())
      if (!contains(g))
        throw DomainError("generator-set mismatch: unknown generator " + g);
}

int GeneratorSet::degree(const Monomial& m) const {
  int deg = 0;
  for (const auto& [g, e] : m.exponents()) deg += degree_of(g) * e;
  return deg;
}

bool GeneratorSet::homogeneous_degree(const FormalSum& s, int& deg_out) const {
  if (s.is_zero()) {
    deg_out = -1;
    return true;
  }
  int deg = degree(s.terms().begin()->first);
  for (const auto& [m, c] : s.terms())
    if (degree(m) != deg) return false;
  deg_out = deg;
  return true;
}

FormalSum QuotientRing::add(const FormalSum& a, const FormalSum& b) const {
  gens_.validate(a);
  gens_.validate(b);
  return a + b;
}

FormalSum QuotientRing::mul(const FormalSum& a, const FormalSum& b) const {
  gens_.validate(a);
  gens_.validate(b);
  return rw_.normal_form(a * b);
}

FormalSum QuotientRing::normal_form(const FormalSum& a) const {
  gens_.validate(a);
  return rw_.normal_form(a);
}

FormalSum QuotientRing::pow(const FormalSum& a, int e) const {
  if (e < 0) throw DomainError("negative power in quotient ring");
  FormalSum out = FormalSum::one();
  for (int i = 0; i < e; ++i) out = mul(out, a);
  return out;
}

FormalSum inv_one_plus(const std::string& g, int m, int t) {
  if (t < 1) throw DomainError("inv_one_plus requires truncation t >= 1");
  if (m < 1) throw DomainError("inv_one_plus requires power m >= 1");
  FormalSum out;
  for (int j = 0; j < t; ++j) {
    Rational c(binomial(m - 1 + j, j));
    if (j % 2 == 1) c = -c;
    out.add_term(Monomial::gen(g, j), c);
  }
  return out;
}

}  // namespace conecalc
