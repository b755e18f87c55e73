#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "conecalc/cone.hpp"
#include "conecalc/error.hpp"

using namespace conecalc;

namespace {

IVec iv(std::initializer_list<long long> vs) {
  IVec out;
  for (long long v : vs) out.emplace_back(v);
  return out;
}

std::set<IVec> ray_set(const PolyCone& c) {
  return {c.rays().begin(), c.rays().end()};
}

}  // namespace

TEST_CASE("quadrant is self dual") {
  PolyCone q = PolyCone::from_rays(2, {iv({1, 0}), iv({0, 1})});
  CHECK(ray_set(q) == std::set<IVec>{iv({1, 0}), iv({0, 1})});
  CHECK(std::set<IVec>(q.facets().begin(), q.facets().end()) ==
        std::set<IVec>{iv({1, 0}), iv({0, 1})});
  CHECK(q.contains(iv({2, 3})));
  CHECK(!q.contains(iv({-1, 1})));
  CHECK(!q.is_extremal_ray(iv({1, 1})));
  CHECK(q.is_extremal_ray(iv({3, 0})));
  CHECK_THROWS_AS(q.is_extremal_ray(iv({-1, 0})), DomainError);
  CHECK_THROWS_AS(q.contains(iv({1, 0, 0})), DomainError);
}

TEST_CASE("degenerate inputs are reported") {
  CHECK_THROWS_WITH_AS(
      PolyCone::from_rays(2, {iv({1, 0})}),
      "non-full-dimensional cone: rays span rank 1 < 2", DomainError);
  CHECK_THROWS_AS(PolyCone::from_rays(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})}),
                  DomainError);
  CHECK_THROWS_AS(PolyCone::from_rays(5, {iv({1, 0, 0, 0, 0})}), DomainError);
  CHECK_THROWS_AS(primitive_vector(iv({0, 0})), DomainError);
}

TEST_CASE("surface cone of the 6-dimensional blow up has 4 facets") {
  // rays of the claimed surface cone at n = 6 in the basis
  // {H^4, j(h2^3), j(h2^2 h1)}
  PolyCone a = PolyCone::from_rays(
      3, {iv({5, -1, -12}), iv({1, 0, -3}), iv({0, 1, 0}), iv({0, 0, 1})});
  CHECK(a.facets().size() == 4);
  CHECK(std::set<IVec>(a.facets().begin(), a.facets().end()) ==
        std::set<IVec>{iv({1, 0, 0}), iv({3, 0, 1}), iv({1, 5, 0}),
                       iv({3, 3, 1})});
  for (const auto& r : a.rays()) CHECK(a.is_extremal_ray(r));

  // bounding cone: 0 <= a,b, a <= 1/5, 2b + 10a <= 6, cleared to integers
  PolyCone b = PolyCone::from_facets(
      3, {iv({0, -1, 0}), iv({0, 0, -1}), iv({1, 5, 0}), iv({6, 10, 2})});
  CHECK(includes(a, b));
  CHECK(!includes(b, a));
  CHECK(includes(a, a));
  CHECK(b.contains(iv({5, -1, -10})));
}

TEST_CASE("dual cone against a numerical pairing") {
  // divisor cone <E, 4H-3E> of the 6-dimensional blow up against the curve
  // basis {H^5, j(h1 h2^3)}; the pairing matrix is [[1,0],[0,-1]]
  PolyCone eff = PolyCone::from_rays(2, {iv({0, 1}), iv({4, -3})});
  PolyCone dual = dual_cone(eff, {iv({1, 0}), iv({0, -1})});
  CHECK(dual.contains(iv({3, -4})));
  CHECK(ray_set(dual) == std::set<IVec>{iv({1, 0}), iv({3, -4})});

  PolyCone quadrant = PolyCone::from_rays(2, {iv({1, 0}), iv({0, 1})});
  PolyCone twice =
      dual_cone(dual_cone(quadrant, {iv({1, 0}), iv({0, 1})}),
                {iv({1, 0}), iv({0, 1})});
  CHECK(twice == quadrant);

  CHECK_THROWS_AS(dual_cone(quadrant, {iv({1, 1}), iv({1, 1})}), DomainError);
}

namespace {

PolyCone random_pointed_cone(std::mt19937& rng, int max_rays = 6) {
  std::uniform_int_distribution<int> entry(-5, 5), nrays(3, max_rays);
  for (;;) {
    std::vector<IVec> rays;
    int n = nrays(rng);
    for (int i = 0; i < n; ++i) {
      IVec v = iv({entry(rng), entry(rng), entry(rng)});
      bool zero = true;
      for (const auto& e : v) zero = zero && e.is_zero();
      if (!zero) rays.push_back(v);
    }
    if (rays.size() < 3) continue;
    try {
      return PolyCone::from_rays(3, rays);
    } catch (const DomainError&) {
      continue;  // non-pointed or flat sample; redraw
    }
  }
}

}  // namespace

TEST_CASE("ray/facet round trip on random pointed cones") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 50; ++trial) {
    PolyCone c = random_pointed_cone(rng);
    PolyCone back = PolyCone::from_facets(3, c.facets());
    CHECK(ray_set(back) == ray_set(c));
    CHECK(std::set<IVec>(back.facets().begin(), back.facets().end()) ==
          std::set<IVec>(c.facets().begin(), c.facets().end()));
    for (const auto& r : c.rays()) {
      CHECK(c.contains(r));
      CHECK(c.is_extremal_ray(r));
    }
  }
}

TEST_CASE("duality is antitone") {
  std::mt19937 rng(91);
  std::vector<IVec> identity = {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})};
  std::uniform_int_distribution<int> entry(-5, 5);
  int done = 0;
  while (done < 30) {
    PolyCone inner = random_pointed_cone(rng, 4);
    std::vector<IVec> rays = inner.rays();
    rays.push_back(iv({entry(rng), entry(rng), entry(rng)}));
    bool zero = true;
    for (const auto& e : rays.back()) zero = zero && e.is_zero();
    if (zero) continue;
    try {
      PolyCone outer = PolyCone::from_rays(3, rays);
      REQUIRE(includes(outer, inner));
      CHECK(includes(dual_cone(inner, identity), dual_cone(outer, identity)));
      ++done;
    } catch (const DomainError&) {
      continue;  // extra ray made the cone non-pointed
    }
  }
}
