#ifndef CONECALC_SECANT_HPP
#define CONECALC_SECANT_HPP

#include <string>

#include "conecalc/blowup.hpp"
#include "conecalc/formal_sum.hpp"

namespace conecalc {

/// Chow ring of the secant bundle P(E_{n,k}) over P^k: generators h, zeta,
/// truncation h^{k+1} -> 0 and the rank-k projective-bundle relation with
/// Chern classes taken from the truncated inverse series of (1+h)^{n-k+1}.
class SecantBundleRing {
 public:
  int n;
  int k;

  const QuotientRing& ring() const { return ring_; }

  /// Truncated total Chern class of the secant bundle, a polynomial in h.
  const FormalSum& chern_total() const { return chern_; }
  /// sum_{i=0..k} c_i(E) zeta^{k-i}; zero in the ring by construction.
  const FormalSum& relation() const { return relation_; }
  /// Right-hand side of the rewrite zeta^k -> ...
  const FormalSum& zeta_rule() const { return zeta_rule_; }

  FormalSum mul(const FormalSum& a, const FormalSum& b) const {
    return ring_.mul(a, b);
  }
  FormalSum pow(const FormalSum& a, int e) const { return ring_.pow(a, e); }
  FormalSum normal_form(const FormalSum& a) const {
    return ring_.normal_form(a);
  }

  /// Coefficient of the point class h^k zeta^{k-1}; input must be
  /// homogeneous of top degree 2k-1 (the zero class is allowed).
  Rational degree_q(const FormalSum& x) const;
  BigInt degree(const FormalSum& x) const;

  static FormalSum h(int e = 1) { return FormalSum::gen("h", e); }
  static FormalSum zeta(int e = 1) { return FormalSum::gen("zeta", e); }

 private:
  friend SecantBundleRing make_secant_ring(int n, int k);
  QuotientRing ring_;
  FormalSum chern_;
  FormalSum relation_;
  FormalSum zeta_rule_;
};

SecantBundleRing make_secant_ring(int n, int k);

/// deg Sec_k(C) for a rational normal curve in P^n: the degree of
/// zeta^{2k-1}. Requires 2k-1 <= n so the image has the expected dimension.
BigInt secant_degree(int n, int k);

struct IncidenceDivisor {
  FormalSum cls;       // 2 zeta - m h
  BigInt coefficient;  // the solved m
};

/// D = 2 zeta - m h with m solved from degree(D * zeta^2) = 0.
IncidenceDivisor incidence_divisor(int n);

/// Pullback and pushforward along psi: P(E_{n,2}) -> X_n (the resolution of
/// the secant variety inside the blow up). The pullback is the
/// multiplicative extension of its values on H and E; the pushforward is
/// solved from the projection formula against the numerical pairing.
class PsiMaps {
 public:
  explicit PsiMaps(int n);

  int n() const { return n_; }
  const SecantBundleRing& secant_ring() const { return pe_; }
  const BlowupPresentation& blowup() const { return x_; }

  const FormalSum& pull_h() const { return pull_H_; }
  const FormalSum& pull_e() const { return pull_E_; }
  const FormalSum& pull_j_h1() const { return pull_j_h1_; }
  const FormalSum& pull_j_h2() const { return pull_j_h2_; }

  FormalSum pullback(const MixedClass& x) const;

  /// gamma must be homogeneous in P(E_{n,2}); the result lands in
  /// codimension n-3+codim(gamma) of X_n. Codimension 0 and 1 inputs
  /// require n >= 5 (the smaller cases have out-of-range monomials).
  MixedClass pushforward(const FormalSum& gamma) const;

 private:
  int n_;
  SecantBundleRing pe_;
  BlowupPresentation x_;
  FormalSum pull_H_, pull_E_, pull_j_h1_, pull_j_h2_;
  FormalSum pull_exceptional_monomial(const Monomial& mono) const;
};

}  // namespace conecalc

#endif
