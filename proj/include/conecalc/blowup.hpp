#ifndef CONECALC_BLOWUP_HPP
#define CONECALC_BLOWUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "conecalc/formal_sum.hpp"
#include "conecalc/linalg.hpp"

namespace conecalc {

enum class Family { RNC, LINE, QUADRIC_CURVE, P3_CURVE };

struct SpaceParams {
  int r = 0;      // ambient dimension (RNC, LINE)
  int d = 0;      // center degree (QUADRIC_CURVE, P3_CURVE)
  int twist = 0;  // a in xi = h2 - a*h1 (P3_CURVE only)
};

/// Presentation of the blow up of P^r along a rational curve of degree d:
/// the exceptional divisor is P^1 x P^m with hyperplane pullbacks h1, h2,
/// the ambient ring is Z[H]/(H^{r+1}), and products follow the blow-up
/// product law with i^*H = d*h1 and xi = h2 - twist*h1.
class BlowupPresentation {
 public:
  Family family;
  int r;      // ambient dimension, >= 3
  int d;      // degree of the blown-up curve
  int m;      // = r - 2, dimension of the second exceptional factor
  int twist;  // a with xi = h2 - a*h1

  const QuotientRing& ambient_ring() const { return ambient_; }
  const QuotientRing& exceptional_ring() const { return exceptional_; }

  /// xi = h2 - twist*h1 as a formal sum in the exceptional ring.
  FormalSum xi() const;

  std::string spec_string() const;  // "xr:5", "w:4", "y:3", "p3:4,7"

 private:
  friend BlowupPresentation make_space(Family, const SpaceParams&);
  QuotientRing ambient_;
  QuotientRing exceptional_;
};

BlowupPresentation make_space(Family family, const SpaceParams& params);
BlowupPresentation make_rnc(int r);
BlowupPresentation make_line_blowup(int r);
BlowupPresentation make_quadric_curve(int d);
BlowupPresentation make_p3_curve(int d, int twist);
BlowupPresentation make_space_from_spec(const std::string& spec);

/// Class in the blow up, split into an ambient polynomial in H and the
/// j-pushforward of a polynomial in h1, h2.
class MixedClass {
 public:
  MixedClass() = default;

  static MixedClass zero() { return MixedClass(); }
  static MixedClass ambient(FormalSum a);
  static MixedClass exceptional(FormalSum e);
  static MixedClass h_power(int k);
  /// E = j_*(1).
  static MixedClass e_divisor();

  const FormalSum& ambient_part() const { return ambient_; }
  const FormalSum& exceptional_part() const { return exceptional_; }
  bool is_zero() const { return ambient_.is_zero() && exceptional_.is_zero(); }

  MixedClass operator-() const;
  MixedClass& operator+=(const MixedClass& o);
  MixedClass& operator-=(const MixedClass& o);
  MixedClass& operator*=(const Rational& c);
  friend MixedClass operator+(MixedClass a, const MixedClass& b) {
    return a += b;
  }
  friend MixedClass operator-(MixedClass a, const MixedClass& b) {
    return a -= b;
  }
  friend MixedClass operator*(const Rational& c, MixedClass a) {
    return a *= c;
  }

  bool operator==(const MixedClass&) const = default;

  /// Canonical rendering: descending H power, then descending h2, h1.
  std::string str() const;

 private:
  FormalSum ambient_;      // polynomial in H
  FormalSum exceptional_;  // polynomial in h1, h2, meaning j_*(...)
};

/// Product per the blow-up multiplication law, reduced to normal form.
MixedClass product(const MixedClass& x, const MixedClass& y,
                   const BlowupPresentation& S);
MixedClass power(const MixedClass& x, int e, const BlowupPresentation& S);
MixedClass normalize(const MixedClass& x, const BlowupPresentation& S);

/// Codimension if homogeneous (-1 for the zero class), nullopt otherwise.
std::optional<int> codimension(const MixedClass& x,
                               const BlowupPresentation& S);

/// Degree of a top-codimension class: coefficient of H^r plus coefficient of
/// j_*(h1 h2^{r-2}).
Rational degree_q(const MixedClass& x, const BlowupPresentation& S);
BigInt degree(const MixedClass& x, const BlowupPresentation& S);

/// Degree pairing of complementary-codimension classes.
Rational pair_classes(const MixedClass& x, const MixedClass& y,
                      const BlowupPresentation& S);

/// The standard codimension-k generators {H^k, j_*(h2^{k-1}),
/// j_*(h2^{k-2} h1)}, with out-of-range monomials dropped.
struct GeneratorList {
  std::vector<MixedClass> classes;
  std::vector<std::string> names;
};
GeneratorList standard_generators(const BlowupPresentation& S, int k);

struct PairingData {
  int k;
  GeneratorList rows;  // codimension k
  GeneratorList cols;  // codimension r-k
  std::vector<IVec> matrix;
};
PairingData pairing_matrix(const BlowupPresentation& S, int k);

struct NumericalBasis {
  int k;
  GeneratorList gens;                 // full standard generator list
  std::vector<std::size_t> selected;  // indices into gens, canonical order
  std::vector<MixedClass> basis;
  std::vector<std::string> basis_names;
  std::vector<IVec> relations;  // kernel of the pairing, over gens
};
NumericalBasis numerical_basis(const BlowupPresentation& S, int k);
int num_rank(const BlowupPresentation& S, int k);

/// Coordinates of a homogeneous codimension-k class in the numerical basis.
QVec to_num(const MixedClass& x, const BlowupPresentation& S, int k);

/// Rebuild a class from numerical-basis coordinates.
MixedClass from_num(const QVec& coords, const NumericalBasis& basis);

}  // namespace conecalc

#endif
