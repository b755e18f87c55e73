#include "conecalc/secant.hpp"

#include <utility>

#include "conecalc/error.hpp"
#include "conecalc/linalg.hpp"

namespace conecalc {

namespace {

const std::string kSh = "h";
const std::string kSz = "zeta";

}  // namespace

Rational SecantBundleRing::degree_q(const FormalSum& x) const {
  FormalSum nf = ring_.normal_form(x);
  if (nf.is_zero()) return Rational(0);
  int deg = -1;
  if (!ring_.generators().homogeneous_degree(nf, deg))
    throw DomainError("degree of inhomogeneous class in P(E)");
  if (deg != 2 * k - 1)
    throw DomainError("degree requires top dimension 2k-1 in P(E)");
  return nf.coeff(Monomial::gen(kSh, k) * Monomial::gen(kSz, k - 1));
}

BigInt SecantBundleRing::degree(const FormalSum& x) const {
  return degree_q(x).as_integer();
}

SecantBundleRing make_secant_ring(int n, int k) {
  if (n < 3) throw DomainError("secant bundle requires n >= 3");
  if (k < 1 || k >= n)
    throw DomainError("secant order out of range: need 1 <= k < n");
  SecantBundleRing out;
  out.n = n;
  out.k = k;
  out.chern_ = inv_one_plus(kSh, n - k + 1, k + 1);

  // zeta^k -> -(c_1 zeta^{k-1} + ... + c_k); the relation is
  // sum_i c_i(E) zeta^{k-i} = 0 from the projective-bundle formula.
  FormalSum rule_rhs;
  FormalSum relation;
  for (const auto& [mono, c] : out.chern_.terms()) {
    int i = mono.exponent(kSh);
    Monomial term = mono * Monomial::gen(kSz, k - i);
    relation.add_term(term, c);
    if (i > 0) rule_rhs.add_term(term, -c);
  }
  out.relation_ = relation;
  out.zeta_rule_ = rule_rhs;

  RewriteSystem rw;
  rw.add_rule(Monomial::gen(kSh, k + 1), FormalSum::zero());
  rw.add_rule(Monomial::gen(kSz, k), std::move(rule_rhs));
  out.ring_ =
      QuotientRing(GeneratorSet({{kSh, 1}, {kSz, 1}}), std::move(rw));
  return out;
}

BigInt secant_degree(int n, int k) {
  if (2 * k - 1 > n)
    throw DomainError(
        "secant_degree requires 2k-1 <= n (the secant map must be "
        "generically finite)");
  SecantBundleRing pe = make_secant_ring(n, k);
  return pe.degree(pe.pow(SecantBundleRing::zeta(), 2 * k - 1));
}

IncidenceDivisor incidence_divisor(int n) {
  if (n < 3) throw DomainError("incidence divisor requires n >= 3");
  SecantBundleRing pe = make_secant_ring(n, 2);
  // D = 2 zeta - m h with degree(D * zeta^2) = 0:
  //   m = 2 deg(zeta^3) / deg(h zeta^2).
  Rational z3 = pe.degree_q(pe.pow(SecantBundleRing::zeta(), 3));
  Rational hz2 = pe.degree_q(
      pe.mul(SecantBundleRing::h(), pe.pow(SecantBundleRing::zeta(), 2)));
  if (hz2.is_zero()) throw DomainError("degenerate pairing solving for D");
  Rational m = Rational(2) * z3 / hz2;
  IncidenceDivisor out;
  out.coefficient = m.as_integer();
  out.cls = SecantBundleRing::zeta() * Rational(2);
  out.cls.add_term(Monomial::gen(kSh), -m);
  if (out.coefficient != BigInt(n - 2))
    throw Error("incidence divisor coefficient mismatch: solved " +
                out.coefficient.str() + " at n=" + std::to_string(n));
  return out;
}

PsiMaps::PsiMaps(int n) : n_(n) {
  if (n < 4) throw DomainError("psi maps require n >= 4");
  pe_ = make_secant_ring(n, 2);
  x_ = make_rnc(n);
  pull_H_ = SecantBundleRing::zeta();
  pull_E_ = incidence_divisor(n).cls;
  // j_*(h1) = (1/n) H*E and j_*(h2) = ((n+2)/n) H*E - E^2 in the formal
  // ring, so the table rows below are forced by multiplicativity.
  FormalSum he = pe_.mul(pull_H_, pull_E_);
  pull_j_h1_ = pe_.normal_form(he * Rational(1, n));
  pull_j_h2_ = pe_.normal_form(he * Rational(n + 2, n) -
                               pe_.mul(pull_E_, pull_E_));
}

FormalSum PsiMaps::pull_exceptional_monomial(const Monomial& mono) const {
  // j_*(h2^i h1^eps) = ((a/d)H - E)^i ((1/d)H)^eps E in the formal ring of
  // X_n with a = n+2, d = n; apply psi^* to each factor.
  int i = mono.exponent("h2");
  int eps = mono.exponent("h1");
  FormalSum h2_factor =
      pull_H_ * Rational(n_ + 2, n_) - pull_E_;
  FormalSum out = pull_E_;
  for (int t = 0; t < i; ++t) out = pe_.mul(out, h2_factor);
  for (int t = 0; t < eps; ++t)
    out = pe_.mul(out, pull_H_ * Rational(1, n_));
  return out;
}

FormalSum PsiMaps::pullback(const MixedClass& x) const {
  x_.ambient_ring().generators().validate(x.ambient_part());
  x_.exceptional_ring().generators().validate(x.exceptional_part());
  FormalSum out;
  for (const auto& [mono, c] : x.ambient_part().terms())
    out += c * pe_.pow(pull_H_, mono.exponent("H"));
  for (const auto& [mono, c] : x.exceptional_part().terms())
    out += c * pull_exceptional_monomial(mono);
  return pe_.normal_form(out);
}

MixedClass PsiMaps::pushforward(const FormalSum& gamma) const {
  FormalSum g = pe_.normal_form(gamma);
  if (g.is_zero()) return MixedClass::zero();
  int c = -1;
  if (!pe_.ring().generators().homogeneous_degree(g, c))
    throw DomainError("pushforward of inhomogeneous class");
  if (c < 0 || c > 2 * pe_.k - 1)
    throw DomainError("pushforward: codimension out of range");
  if (c <= 1 && n_ < 5)
    throw DomainError(
        "pushforward of codimension <= 1 classes requires n >= 5");
  int target = n_ - 3 + c;
  int complement = 3 - c;
  NumericalBasis nb = numerical_basis(x_, target);
  GeneratorList comp = standard_generators(x_, complement);

  // projection formula: <psi_* g, beta> = deg_PE(g * psi^* beta)
  QVec rhs;
  for (const auto& beta : comp.classes)
    rhs.push_back(pe_.degree_q(pe_.mul(g, pullback(beta))));
  QMat basis_rows;
  for (const auto& b : nb.basis) {
    QVec row;
    for (const auto& beta : comp.classes)
      row.push_back(pair_classes(b, beta, x_));
    basis_rows.push_back(std::move(row));
  }
  auto sol = solve(transpose(basis_rows), rhs);
  if (!sol)
    throw DomainError(
        "pushforward duality solve is inconsistent (degenerate pairing)");
  return from_num(*sol, nb);
}

}  // namespace conecalc
