#include "conecalc/expr.hpp"

#include <cctype>
#include <sstream>

#include "conecalc/error.hpp"

namespace conecalc {

namespace {

using Kind = Expr::Kind;

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int j_depth_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(unsigned(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      std::size_t at = pos_;
      if (accept('+')) {
        ExprPtr rhs = term();
        lhs = node({Kind::Add, {}, {}, lhs, rhs, 0, at});
      } else if (accept('-')) {
        ExprPtr rhs = term();
        lhs = node({Kind::Sub, {}, {}, lhs, rhs, 0, at});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (accept('*')) {
      std::size_t at = pos_;
      ExprPtr rhs = unary();
      lhs = node({Kind::Mul, {}, {}, lhs, rhs, 0, at});
    }
    return lhs;
  }

  ExprPtr unary() {
    skip_ws();
    std::size_t at = pos_;
    if (accept('-')) {
      ExprPtr child = unary();
      return node({Kind::Neg, {}, {}, child, nullptr, 0, at});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    while (accept('^')) {
      std::size_t at = pos_;
      long long e = natural("exponent");
      if (e > 64) throw ParseError("exponent too large", at);
      base = node({Kind::Pow, {}, {}, base, nullptr, int(e), at});
    }
    return base;
  }

  long long natural(const char* what) {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(unsigned(text_[pos_])))
      throw ParseError(std::string("expected ") + what, at);
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(unsigned(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1ll << 40)) throw ParseError("numeric literal too large", at);
      ++pos_;
    }
    return v;
  }

  ExprPtr atom() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
    char c = text_[pos_];
    if (std::isdigit(unsigned(c))) {
      long long num = natural("number");
      if (accept('/')) {
        long long den = natural("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
        return node({Kind::Literal, Rational(num, den), {}, nullptr, nullptr,
                     0, at});
      }
      return node(
          {Kind::Literal, Rational(num), {}, nullptr, nullptr, 0, at});
    }
    if (accept('(')) {
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(unsigned(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(unsigned(text_[pos_])) || text_[pos_] == '_'))
        name.push_back(text_[pos_++]);
      if (name == "j" && peek('(')) {
        if (j_depth_ > 0) throw ParseError("nested j", at);
        ++j_depth_;
        expect('(');
        ExprPtr inner = expr();
        expect(')');
        --j_depth_;
        return node({Kind::J, {}, {}, inner, nullptr, 0, at});
      }
      return node({Kind::Gen, {}, name, nullptr, nullptr, 0, at});
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
};

int precedence(Kind k) {
  switch (k) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Neg:
      return 2;
    case Kind::Mul:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const ExprPtr& e, std::ostream& os, int parent_prec) {
  int prec = precedence(e->kind);
  bool parens = prec < parent_prec;
  if (parens) os << "(";
  switch (e->kind) {
    case Kind::Literal:
      os << e->literal.str();
      break;
    case Kind::Gen:
      os << e->name;
      break;
    case Kind::J:
      os << "j(";
      print(e->a, os, 0);
      os << ")";
      break;
    case Kind::Add:
      print(e->a, os, 1);
      os << " + ";
      print(e->b, os, 2);
      break;
    case Kind::Sub:
      print(e->a, os, 1);
      os << " - ";
      print(e->b, os, 2);
      break;
    case Kind::Mul:
      print(e->a, os, 3);
      os << "*";
      print(e->b, os, 4);
      break;
    case Kind::Pow:
      print(e->a, os, 5);
      os << "^" << e->exponent;
      break;
    case Kind::Neg:
      os << "-";
      print(e->a, os, 3);
      break;
  }
  if (parens) os << ")";
}

// Shared evaluator over any value type with ring callbacks.
template <typename V, typename Ops>
V eval(const ExprPtr& e, const Ops& ops) {
  switch (e->kind) {
    case Kind::Literal:
      return ops.literal(e->literal);
    case Kind::Gen:
      return ops.generator(e->name, e->offset);
    case Kind::J:
      return ops.j_wrap(e->a, e->offset);
    case Kind::Add:
      return ops.add(eval<V>(e->a, ops), eval<V>(e->b, ops));
    case Kind::Sub:
      return ops.add(eval<V>(e->a, ops), ops.negate(eval<V>(e->b, ops)));
    case Kind::Mul:
      return ops.mul(eval<V>(e->a, ops), eval<V>(e->b, ops));
    case Kind::Pow: {
      V out = ops.literal(Rational(1));
      V base = eval<V>(e->a, ops);
      for (int i = 0; i < e->exponent; ++i) out = ops.mul(out, base);
      return out;
    }
    case Kind::Neg:
      return ops.negate(eval<V>(e->a, ops));
  }
  throw Error("unreachable expression kind");
}

// evaluator for the h1/h2 polynomial inside j(...)
FormalSum eval_inside_j(const ExprPtr& e, const QuotientRing& exc) {
  struct Ops {
    const QuotientRing& ring;
    FormalSum literal(const Rational& c) const { return FormalSum(c); }
    FormalSum generator(const std::string& name, std::size_t at) const {
      if (name != "h1" && name != "h2")
        throw ParseError("only h1 and h2 may appear inside j(...), got '" +
                             name + "'",
                         at);
      return FormalSum::gen(name);
    }
    FormalSum j_wrap(const ExprPtr&, std::size_t at) const {
      throw ParseError("nested j", at);
    }
    FormalSum add(FormalSum a, const FormalSum& b) const { return a + b; }
    FormalSum negate(FormalSum a) const { return -a; }
    FormalSum mul(const FormalSum& a, const FormalSum& b) const {
      return ring.mul(a, b);
    }
  } ops{exc};
  return eval<FormalSum>(e, ops);
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Literal:
      return a->literal == b->literal;
    case Kind::Gen:
      return a->name == b->name;
    case Kind::J:
    case Kind::Neg:
      return expr_equal(a->a, b->a);
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
      return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    case Kind::Pow:
      return a->exponent == b->exponent && expr_equal(a->a, b->a);
  }
  return false;
}

std::string expr_str(const ExprPtr& e) {
  std::ostringstream os;
  print(e, os, 0);
  return os.str();
}

MixedClass eval_blowup_expr(const ExprPtr& e, const BlowupPresentation& S) {
  struct Ops {
    const BlowupPresentation& S;
    MixedClass literal(const Rational& c) const {
      return c * MixedClass::ambient(FormalSum::one());
    }
    MixedClass generator(const std::string& name, std::size_t at) const {
      if (name == "H") return MixedClass::h_power(1);
      if (name == "E") return MixedClass::e_divisor();
      if (name == "h1" || name == "h2")
        throw ParseError("generator " + name +
                             " is only allowed inside j(...) here",
                         at);
      throw ParseError("unknown generator '" + name + "' for space " +
                           S.spec_string(),
                       at);
    }
    MixedClass j_wrap(const ExprPtr& inner, std::size_t) const {
      return MixedClass::exceptional(
          eval_inside_j(inner, S.exceptional_ring()));
    }
    MixedClass add(MixedClass a, const MixedClass& b) const { return a + b; }
    MixedClass negate(MixedClass a) const { return -a; }
    MixedClass mul(const MixedClass& a, const MixedClass& b) const {
      return product(a, b, S);
    }
  } ops{S};
  return eval<MixedClass>(e, ops);
}

FormalSum eval_secant_expr(const ExprPtr& e, const SecantBundleRing& ring) {
  struct Ops {
    const SecantBundleRing& ring;
    FormalSum literal(const Rational& c) const { return FormalSum(c); }
    FormalSum generator(const std::string& name, std::size_t at) const {
      if (name == "h" || name == "zeta") return FormalSum::gen(name);
      throw ParseError("unknown generator '" + name +
                           "' for a secant bundle ring (use h, zeta)",
                       at);
    }
    FormalSum j_wrap(const ExprPtr&, std::size_t at) const {
      throw ParseError("j(...) is not defined in a secant bundle ring", at);
    }
    FormalSum add(FormalSum a, const FormalSum& b) const { return a + b; }
    FormalSum negate(FormalSum a) const { return -a; }
    FormalSum mul(const FormalSum& a, const FormalSum& b) const {
      return ring.mul(a, b);
    }
  } ops{ring};
  return eval<FormalSum>(e, ops);
}

MixedClass eval_blowup_expr(const std::string& text,
                            const BlowupPresentation& S) {
  return eval_blowup_expr(parse_expr(text), S);
}

FormalSum eval_secant_expr(const std::string& text,
                           const SecantBundleRing& ring) {
  return eval_secant_expr(parse_expr(text), ring);
}

}  // namespace conecalc
