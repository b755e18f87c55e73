#include "conecalc/blowup.hpp"

#include <sstream>
#include <utility>

#include "conecalc/error.hpp"

namespace conecalc {

namespace {

const std::string kH = "H";
const std::string kH1 = "h1";
const std::string kH2 = "h2";

QuotientRing make_ambient_ring(int r) {
  RewriteSystem rw;
  rw.add_rule(Monomial::gen(kH, r + 1), FormalSum::zero());
  return QuotientRing(GeneratorSet({{kH, 1}}), std::move(rw));
}

QuotientRing make_exceptional_ring(int m) {
  RewriteSystem rw;
  rw.add_rule(Monomial::gen(kH1, 2), FormalSum::zero());
  rw.add_rule(Monomial::gen(kH2, m + 1), FormalSum::zero());
  return QuotientRing(GeneratorSet({{kH1, 1}, {kH2, 1}}), std::move(rw));
}

// substitute H -> d*h1 in an ambient polynomial (the restriction i^* to the
// center followed by pullback to E)
FormalSum restrict_to_exceptional(const FormalSum& ambient, int d) {
  FormalSum out;
  for (const auto& [mono, c] : ambient.terms()) {
    int p = mono.exponent(kH);
    out.add_term(Monomial::gen(kH1, p), c * Rational(BigInt(d).pow(unsigned(p))));
  }
  return out;
}

std::string exceptional_monomial_str(const Monomial& mono) {
  // h2 before h1, matching the catalog's rendering of j_* classes
  int e2 = mono.exponent(kH2);
  int e1 = mono.exponent(kH1);
  std::ostringstream os;
  if (e2 > 0) {
    os << kH2;
    if (e2 > 1) os << "^" << e2;
  }
  if (e1 > 0) {
    if (e2 > 0) os << "*";
    os << kH1;
    if (e1 > 1) os << "^" << e1;
  }
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

}  // namespace

FormalSum BlowupPresentation::xi() const {
  FormalSum out = FormalSum::gen(kH2);
  out.add_term(Monomial::gen(kH1), Rational(-twist));
  return out;
}

std::string BlowupPresentation::spec_string() const {
  switch (family) {
    case Family::RNC:
      return "xr:" + std::to_string(r);
    case Family::LINE:
      return "w:" + std::to_string(r);
    case Family::QUADRIC_CURVE:
      return "y:" + std::to_string(d);
    case Family::P3_CURVE:
      return "p3:" + std::to_string(d) + "," + std::to_string(twist);
  }
  throw Error("unreachable");
}

BlowupPresentation make_space(Family family, const SpaceParams& params) {
  BlowupPresentation S;
  S.family = family;
  switch (family) {
    case Family::RNC:
      if (params.r < 3)
        throw DomainError("RNC blow up requires ambient dimension r >= 3");
      S.r = params.r;
      S.d = params.r;
      S.twist = params.r + 2;
      break;
    case Family::LINE:
      if (params.r < 3)
        throw DomainError("line blow up requires ambient dimension r >= 3");
      S.r = params.r;
      S.d = 1;
      S.twist = 1;
      break;
    case Family::QUADRIC_CURVE:
      if (params.d < 3)
        throw DomainError(
            "quadric-curve blow up requires curve degree d >= 3");
      S.r = 3;
      S.d = params.d;
      S.twist = 2 * params.d - 1;
      break;
    case Family::P3_CURVE:
      if (params.d < 1)
        throw DomainError("P3 curve blow up requires curve degree d >= 1");
      S.r = 3;
      S.d = params.d;
      S.twist = params.twist;
      break;
  }
  S.m = S.r - 2;
  S.ambient_ = make_ambient_ring(S.r);
  S.exceptional_ = make_exceptional_ring(S.m);
  return S;
}

BlowupPresentation make_rnc(int r) {
  SpaceParams p;
  p.r = r;
  return make_space(Family::RNC, p);
}

BlowupPresentation make_line_blowup(int r) {
  SpaceParams p;
  p.r = r;
  return make_space(Family::LINE, p);
}

BlowupPresentation make_quadric_curve(int d) {
  SpaceParams p;
  p.d = d;
  return make_space(Family::QUADRIC_CURVE, p);
}

BlowupPresentation make_p3_curve(int d, int twist) {
  SpaceParams p;
  p.d = d;
  p.twist = twist;
  return make_space(Family::P3_CURVE, p);
}

BlowupPresentation make_space_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("bad space spec '" + spec +
                     "', expected xr:<r> | w:<r> | y:<d> | p3:<d>,<a> | "
                     "sec:<n>,<k>");
  std::string tag = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + s + "' in space spec '" + spec + "'");
    }
  };
  if (tag == "xr") return make_rnc(parse_int(rest));
  if (tag == "w") return make_line_blowup(parse_int(rest));
  if (tag == "y") return make_quadric_curve(parse_int(rest));
  if (tag == "p3") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw UsageError("p3 space spec needs p3:<d>,<a>");
    return make_p3_curve(parse_int(rest.substr(0, comma)),
                         parse_int(rest.substr(comma + 1)));
  }
  throw UsageError("unknown space family '" + tag + "' in '" + spec + "'");
}

MixedClass MixedClass::ambient(FormalSum a) {
  MixedClass out;
  out.ambient_ = std::move(a);
  return out;
}

MixedClass MixedClass::exceptional(FormalSum e) {
  MixedClass out;
  out.exceptional_ = std::move(e);
  return out;
}

MixedClass MixedClass::h_power(int k) {
  return ambient(FormalSum(Monomial::gen(kH, k)));
}

MixedClass MixedClass::e_divisor() { return exceptional(FormalSum::one()); }

MixedClass MixedClass::operator-() const {
  MixedClass out;
  out.ambient_ = -ambient_;
  out.exceptional_ = -exceptional_;
  return out;
}

MixedClass& MixedClass::operator+=(const MixedClass& o) {
  ambient_ += o.ambient_;
  exceptional_ += o.exceptional_;
  return *this;
}

MixedClass& MixedClass::operator-=(const MixedClass& o) {
  ambient_ -= o.ambient_;
  exceptional_ -= o.exceptional_;
  return *this;
}

MixedClass& MixedClass::operator*=(const Rational& c) {
  ambient_ *= c;
  exceptional_ *= c;
  return *this;
}

std::string MixedClass::str() const {
  if (is_zero()) return "0";
  // collect (order key, rendered monomial, coefficient)
  struct Term {
    std::string text;
    Rational coeff;
  };
  std::vector<Term> out;
  std::vector<std::pair<int, const Rational*>> amb;
  for (const auto& [mono, c] : ambient_.terms())
    amb.emplace_back(mono.exponent(kH), &c);
  std::sort(amb.begin(), amb.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [p, c] : amb) {
    std::string t = p == 0 ? "1" : (p == 1 ? kH : kH + "^" + std::to_string(p));
    out.push_back({t, *c});
  }
  std::vector<std::tuple<int, int, const Monomial*, const Rational*>> exc;
  for (const auto& [mono, c] : exceptional_.terms())
    exc.emplace_back(mono.exponent(kH2), mono.exponent(kH1), &mono, &c);
  std::sort(exc.begin(), exc.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    return std::get<1>(a) > std::get<1>(b);
  });
  for (const auto& [e2, e1, mono, c] : exc) {
    std::string t =
        mono->is_one() ? "E" : "j(" + exceptional_monomial_str(*mono) + ")";
    out.push_back({t, *c});
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& term : out) {
    Rational a = term.coeff;
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
    if (term.text == "1")
      os << a.str();
    else if (a == Rational(1))
      os << term.text;
    else
      os << a.str() << "*" << term.text;
  }
  return os.str();
}

MixedClass normalize(const MixedClass& x, const BlowupPresentation& S) {
  MixedClass out;
  out += MixedClass::ambient(S.ambient_ring().normal_form(x.ambient_part()));
  out += MixedClass::exceptional(
      S.exceptional_ring().normal_form(x.exceptional_part()));
  return out;
}

MixedClass product(const MixedClass& x, const MixedClass& y,
                   const BlowupPresentation& S) {
  const QuotientRing& amb = S.ambient_ring();
  const QuotientRing& exc = S.exceptional_ring();
  amb.generators().validate(x.ambient_part());
  amb.generators().validate(y.ambient_part());
  exc.generators().validate(x.exceptional_part());
  exc.generators().validate(y.exceptional_part());

  FormalSum ambient_out =
      amb.rewrites().normal_form(x.ambient_part() * y.ambient_part());

  // H^p * j_*(beta) = j_*((d h1)^p beta); j_*(beta) j_*(gamma) = -j_*(xi beta gamma)
  FormalSum exceptional_out =
      restrict_to_exceptional(x.ambient_part(), S.d) * y.exceptional_part();
  exceptional_out +=
      restrict_to_exceptional(y.ambient_part(), S.d) * x.exceptional_part();
  exceptional_out -= S.xi() * x.exceptional_part() * y.exceptional_part();

  MixedClass out;
  out += MixedClass::ambient(std::move(ambient_out));
  out += MixedClass::exceptional(
      exc.rewrites().normal_form(exceptional_out));
  return out;
}

MixedClass power(const MixedClass& x, int e, const BlowupPresentation& S) {
  if (e < 0) throw DomainError("negative power of a class");
  MixedClass out = MixedClass::ambient(FormalSum::one());
  for (int i = 0; i < e; ++i) out = product(out, x, S);
  return out;
}

std::optional<int> codimension(const MixedClass& x,
                               const BlowupPresentation& S) {
  int ka = -1, ke = -1;
  if (!S.ambient_ring().generators().homogeneous_degree(x.ambient_part(), ka))
    return std::nullopt;
  if (!S.exceptional_ring().generators().homogeneous_degree(
          x.exceptional_part(), ke))
    return std::nullopt;
  if (ka < 0 && ke < 0) return -1;  // zero class
  if (ka < 0) return ke + 1;
  if (ke < 0) return ka;
  return ka == ke + 1 ? std::optional<int>(ka) : std::nullopt;
}

Rational degree_q(const MixedClass& x, const BlowupPresentation& S) {
  MixedClass n = normalize(x, S);
  auto k = codimension(n, S);
  if (!k) throw DomainError("degree of inhomogeneous class");
  if (*k == -1) return Rational(0);
  if (*k != S.r)
    throw DomainError("degree requires a top-codimension class (codim " +
                      std::to_string(*k) + " of " + std::to_string(S.r) + ")");
  Rational out = n.ambient_part().coeff(Monomial::gen(kH, S.r));
  out += n.exceptional_part().coeff(Monomial::gen(kH1) *
                                    Monomial::gen(kH2, S.m));
  return out;
}

BigInt degree(const MixedClass& x, const BlowupPresentation& S) {
  return degree_q(x, S).as_integer();
}

Rational pair_classes(const MixedClass& x, const MixedClass& y,
                      const BlowupPresentation& S) {
  return degree_q(product(x, y, S), S);
}

GeneratorList standard_generators(const BlowupPresentation& S, int k) {
  if (k < 0 || k > S.r)
    throw DomainError("codimension out of range: " + std::to_string(k));
  GeneratorList out;
  if (k <= S.r) {
    out.classes.push_back(MixedClass::h_power(k));
    out.names.push_back(k == 0 ? "1"
                               : (k == 1 ? kH : kH + "^" + std::to_string(k)));
  }
  if (k >= 1 && k - 1 <= S.m) {
    Monomial mono = Monomial::gen(kH2, k - 1);
    out.classes.push_back(MixedClass::exceptional(FormalSum(mono)));
    out.names.push_back(mono.is_one() ? "E"
                                      : "j(" + exceptional_monomial_str(mono) +
                                            ")");
  }
  if (k >= 2 && k - 2 <= S.m) {
    Monomial mono = Monomial::gen(kH2, k - 2) * Monomial::gen(kH1);
    out.classes.push_back(MixedClass::exceptional(FormalSum(mono)));
    out.names.push_back("j(" + exceptional_monomial_str(mono) + ")");
  }
  return out;
}

PairingData pairing_matrix(const BlowupPresentation& S, int k) {
  if (k < 0 || k > S.r)
    throw DomainError("codimension out of range: " + std::to_string(k));
  PairingData out;
  out.k = k;
  out.rows = standard_generators(S, k);
  out.cols = standard_generators(S, S.r - k);
  for (const auto& g : out.rows.classes) {
    IVec row;
    for (const auto& h : out.cols.classes)
      row.push_back(pair_classes(g, h, S).as_integer());
    out.matrix.push_back(std::move(row));
  }
  return out;
}

NumericalBasis numerical_basis(const BlowupPresentation& S, int k) {
  PairingData pd = pairing_matrix(S, k);
  NumericalBasis out;
  out.k = k;
  out.gens = pd.rows;

  QMat rows;
  for (const auto& r : pd.matrix) rows.push_back(to_rational(r));

  for (const auto& rel : left_kernel(rows))
    out.relations.push_back(primitive_integer_signed(rel));

  // Greedy basis selection. Preference order keeps H^k, then the h1 monomial,
  // then h2^{k-1}: at k = r-1 this eliminates j_*(h2^{r-2}) via the numerical
  // relation, matching the coordinates used throughout the catalog.
  std::vector<std::size_t> preference;
  for (std::size_t i = 0; i < out.gens.classes.size(); ++i) preference.push_back(i);
  if (preference.size() == 3) preference = {0, 2, 1};

  QMat picked;
  std::vector<std::size_t> selected;
  for (std::size_t idx : preference) {
    QMat trial = picked;
    trial.push_back(rows[idx]);
    if (rank(trial) > rank(picked)) {
      picked = std::move(trial);
      selected.push_back(idx);
    }
  }
  std::sort(selected.begin(), selected.end());
  out.selected = selected;
  for (std::size_t idx : selected) {
    out.basis.push_back(out.gens.classes[idx]);
    out.basis_names.push_back(out.gens.names[idx]);
  }
  return out;
}

int num_rank(const BlowupPresentation& S, int k) {
  return int(numerical_basis(S, k).basis.size());
}

QVec to_num(const MixedClass& x, const BlowupPresentation& S, int k) {
  MixedClass n = normalize(x, S);
  auto c = codimension(n, S);
  if (!c) throw DomainError("to_num of inhomogeneous class");
  if (*c != -1 && *c != k)
    throw DomainError("to_num: class has codimension " + std::to_string(*c) +
                      ", expected " + std::to_string(k));
  NumericalBasis nb = numerical_basis(S, k);
  GeneratorList comp = standard_generators(S, S.r - k);
  // pairings of x against the complementary generators
  QVec rhs;
  for (const auto& g : comp.classes) rhs.push_back(pair_classes(n, g, S));
  // pairings of the selected basis against the same generators
  QMat basis_rows;
  for (const auto& b : nb.basis) {
    QVec row;
    for (const auto& g : comp.classes) row.push_back(pair_classes(b, g, S));
    basis_rows.push_back(std::move(row));
  }
  auto sol = solve(transpose(basis_rows), rhs);
  if (!sol)
    throw DomainError("to_num: class is not in the span of the generators");
  return *sol;
}

MixedClass from_num(const QVec& coords, const NumericalBasis& basis) {
  if (coords.size() != basis.basis.size())
    throw DomainError("from_num: coordinate count mismatch");
  MixedClass out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    out += coords[i] * basis.basis[i];
  return out;
}

}  // namespace conecalc
