#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conecalc/catalog.hpp"
#include "conecalc/error.hpp"
#include "conecalc/expr.hpp"

using namespace conecalc;

TEST_CASE("grammar shape of a squared difference") {
  ExprPtr e = parse_expr("(3*H - 2*E)^2");
  REQUIRE(e->kind == Expr::Kind::Pow);
  CHECK(e->exponent == 2);
  const Expr& sub = *e->a;
  REQUIRE(sub.kind == Expr::Kind::Sub);
  CHECK(sub.a->kind == Expr::Kind::Mul);
  CHECK(sub.a->a->literal == Rational(3));
  CHECK(sub.a->b->name == "H");
  CHECK(sub.b->b->name == "E");
}

TEST_CASE("whitespace insensitivity and precedence") {
  CHECK(expr_equal(parse_expr("5*H^4-j(h2^3)-12*j(h2^2*h1)"),
                   parse_expr("  5 * H^4 - j( h2^3 ) - 12 * j(h2^2 * h1)")));
  // '^' binds tighter than '*' binds tighter than '+'
  ExprPtr e = parse_expr("2*H^3 + E");
  REQUIRE(e->kind == Expr::Kind::Add);
  CHECK(e->a->kind == Expr::Kind::Mul);
  CHECK(e->a->b->kind == Expr::Kind::Pow);
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(parse_expr("j(j(h1))"), "nested j (at byte 2)",
                       ParseError);
  try {
    parse_expr("3*H + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 6);
  }
  CHECK_THROWS_AS(parse_expr("(3*H"), ParseError);
  CHECK_THROWS_AS(parse_expr("3*H)"), ParseError);
  CHECK_THROWS_AS(parse_expr("H^x"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("evaluation against the selected space") {
  BlowupPresentation x5 = make_rnc(5);
  MixedClass v = eval_blowup_expr("(3*H - 2*E)^2", x5);
  MixedClass manual = power(Rational(3) * MixedClass::h_power(1) -
                                Rational(2) * MixedClass::e_divisor(),
                            2, x5);
  CHECK(v == manual);

  CHECK_THROWS_AS(eval_blowup_expr("zeta", x5), ParseError);
  CHECK_THROWS_AS(eval_blowup_expr("h1 + H", x5), ParseError);
  CHECK_THROWS_AS(eval_blowup_expr("j(H)", x5), ParseError);

  SecantBundleRing pe = make_secant_ring(5, 2);
  FormalSum s = eval_secant_expr("2*zeta - 3*h", pe);
  CHECK(s == Rational(2) * SecantBundleRing::zeta() -
                 Rational(3) * SecantBundleRing::h());
  CHECK_THROWS_AS(eval_secant_expr("H", pe), ParseError);
  CHECK_THROWS_AS(eval_secant_expr("j(h1)", pe), ParseError);
}

TEST_CASE("rational literals") {
  BlowupPresentation x4 = make_rnc(4);
  MixedClass v = eval_blowup_expr("3/2*H - 1/2*H", x4);
  CHECK(v == MixedClass::h_power(1));
}

TEST_CASE("printer output reparses to an equal tree") {
  std::vector<std::string> samples = {
      "(3*H - 2*E)^2",
      "5*H^4 - j(h2^3) - 12*j(h2^2*h1)",
      "-h + 2*zeta",
      "2*(H - E)^3",
      "H - (E - H)",
      "1/2*H^2",
      "-(H + E)",
      "j(h2*h1)*j(h2)",
  };
  for (const auto& text : samples) {
    ExprPtr e = parse_expr(text);
    CHECK(expr_equal(parse_expr(expr_str(e)), e));
  }
}

TEST_CASE("every catalog expression parses and round trips") {
  for (const auto& rec : list_cases()) {
    for (const auto& params : rec.instances) {
      CaseInstance ci = instantiate_case(rec.id, params);
      for (const auto& claim : ci.cones) {
        std::vector<std::string> all = claim.generators;
        all.insert(all.end(), claim.certificates.begin(),
                   claim.certificates.end());
        for (const auto& text : all) {
          ExprPtr e = parse_expr(text);
          CHECK(expr_equal(parse_expr(expr_str(e)), e));
        }
      }
    }
  }
}
