#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conecalc/catalog.hpp"
#include "conecalc/error.hpp"

using namespace conecalc;

namespace {

ParamMap P(std::initializer_list<std::pair<const char*, int>> kv) {
  ParamMap out;
  for (const auto& [k, v] : kv) out[k] = v;
  return out;
}

const TheoremRecord& record(const std::string& id) {
  static std::vector<TheoremRecord> all = list_cases();
  for (const auto& rec : all)
    if (rec.id == id) return rec;
  throw std::runtime_error("missing record " + id);
}

}  // namespace

TEST_CASE("closed-form counts") {
  CHECK(berzolari(6, 0) == BigInt(20));
  CHECK(berzolari(5, 0) == BigInt(8));
  CHECK(berzolari(3, 0) == BigInt(0));
  CHECK(berzolari(6, 1) == BigInt(16));
  CHECK_THROWS_AS(berzolari(0, 0), DomainError);
  CHECK_THROWS_AS(berzolari(4, -1), DomainError);

  CHECK(projection_nodes(4) == BigInt(1));
  CHECK(projection_nodes(6) == BigInt(6));
  CHECK(projection_nodes(3) == BigInt(0));
  CHECK_THROWS_AS(projection_nodes(2), DomainError);

  CHECK(h0_p3(2) == BigInt(10));
  CHECK(h0_p3(3) == BigInt(20));
  CHECK(h0_p3(0) == BigInt(1));
  CHECK_THROWS_AS(h0_p3(-1), DomainError);

  CHECK(h0_curve(4, 2) == BigInt(9));
  CHECK(h0_curve(6, 3) == BigInt(19));
}

TEST_CASE("slope bounds for curves in a fixed surface") {
  CHECK(z_slope_limit(3, 9) == Rational(3));
  CHECK(z_slope_limit(2, 4) == Rational(2));
  CHECK(z_slope_limit(5, 7) == Rational(7, 5));
  CHECK_THROWS_AS(z_slope(3, 9, 3), DomainError);  // m*d - e = 0
  CHECK_THROWS_AS(z_slope(0, 1, 5), DomainError);

  // finite-m bound: at or below the limit and nondecreasing once e >= d
  for (int d = 2; d <= 6; ++d) {
    for (int e = d; e <= 40; e += 7) {
      Rational limit = z_slope_limit(d, e);
      Rational prev = z_slope(d, e, e / d + 1);
      for (int m = e / d + 2; m <= 50; ++m) {
        Rational cur = z_slope(d, e, m);
        CHECK(prev <= cur);
        CHECK(cur <= limit);
        prev = cur;
      }
    }
  }
}

TEST_CASE("worked verification cases") {
  VerificationReport even = verify_case("eff1_even", P({{"n", 2}}));
  CHECK(even.pass);
  bool found = false;
  for (const auto& c : even.checks)
    if (c.name == "dual_ray_vanishes_on_secant_class") {
      found = true;
      CHECK(c.pass);
    }
  CHECK(found);

  VerificationReport ab = verify_case("eff2_AB", P({{"n", 6}}));
  CHECK(ab.pass);

  VerificationReport neg = verify_case("S2_negative", P({{"n", 6}}));
  CHECK(neg.pass);
  REQUIRE(neg.checks.size() >= 1);
  CHECK(neg.checks.back().computed == "-6");
}

TEST_CASE("reports flag the assumed geometric inputs") {
  VerificationReport rep = verify_case("eff1_Yd", P({{"d", 3}}));
  bool flagged = false;
  for (const auto& note : rep.notes)
    flagged = flagged || note.rfind("assumed-geometric-input", 0) == 0;
  CHECK(flagged);
}

TEST_CASE("errors for unknown cases and out-of-range parameters") {
  CHECK_THROWS_AS(verify_case("nope", {}), UsageError);
  CHECK_THROWS_AS(verify_case("cor_relation", P({{"r", 99}})), DomainError);
  CHECK_THROWS_AS(verify_case("eff2_AB", P({{"n", 4}})), DomainError);
}

TEST_CASE("catalog contents and declared ranges") {
  const TheoremRecord& w = record("effW_k");
  bool has_w34 = false;
  for (const auto& inst : w.instances)
    has_w34 = has_w34 || (inst.at("r") == 8 && inst.at("k") == 7);
  CHECK(has_w34);

  const TheoremRecord& y = record("eff1_Y");
  CHECK(y.instances.front().at("d") == 3);
  CHECK(y.instances.back().at("d") == 8);

  CaseInstance q5 = instantiate_case("lowdeg_Q", P({{"d", 5}}));
  REQUIRE(q5.cones.size() == 1);
  CHECK(q5.cones[0].generators ==
        std::vector<std::string>{"E", "8*H - 3*E"});

  CaseInstance q6 = instantiate_case("lowdeg_Q", P({{"d", 6}}));
  CHECK(q6.cones[0].generators == std::vector<std::string>{"E", "3*H - E"});
}

TEST_CASE("extremality arithmetic for the secant threefold") {
  for (int n = 4; n <= 10; ++n) {
    Rational ratio = Rational(n - 2) / Rational(binomial(n - 1, 2));
    CHECK(ratio > Rational(1, n - 2));
  }
}

TEST_CASE("trisecant ratio case split") {
  CHECK(Rational(BigInt(6), berzolari(6, 0)) < Rational(1, 3));
  CHECK(Rational(BigInt(3), berzolari(5, 0)) > Rational(1, 3));
}

TEST_CASE("cone descriptions expose rays and facets") {
  auto descs = cone_descriptions("eff2_AB", P({{"n", 6}}));
  REQUIRE(descs.size() == 2);
  CHECK(descs[0].rays.size() == 4);
  CHECK(descs[0].facets.size() == 4);
  CHECK(descs[1].label == "bounding cone B");
  CHECK(descs[1].rays.size() == 4);

  auto pe_descs = cone_descriptions("eff1_PE", P({{"n", 5}}));
  REQUIRE(pe_descs.size() == 1);
  CHECK(pe_descs[0].rays.size() == 2);
}

TEST_CASE("master regression: every record verifies on its full range") {
  for (const auto& rep : verify_all()) {
    INFO(rep.id);
    CHECK(rep.pass);
  }
}
