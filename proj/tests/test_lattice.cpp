#include <random>
#include <vector>

#include "doctest.h"
#include "lgb/errors.hpp"
#include "lgb/lattice.hpp"

using namespace lgb;

TEST_CASE("standard decomposition") {
  const auto d2 = build_decomposition(DecompositionKind::Standard, 2);
  REQUIRE(d2->size() == 3);
  const Cone& t1 = d2->cone(1);
  CHECK(t1.contains({-3, 1}));
  CHECK(t1.contains({-1, -1}));
  CHECK_FALSE(t1.contains({1, 0}));
  CHECK_FALSE(t1.contains({-1, -2}));
  CHECK(d2->cone(0).contains({1, 2}));
  CHECK_FALSE(d2->cone(2).contains({0, 1}));

  const auto d1 = build_decomposition(DecompositionKind::Standard, 1);
  REQUIRE(d1->size() == 2);
  CHECK(d1->cone(0).contains({3}));
  CHECK(d1->cone(1).contains({-3}));
  CHECK_FALSE(d1->cone(1).contains({1}));

  for (std::size_t n = 1; n <= 5; ++n) CHECK(build_decomposition(DecompositionKind::Standard, n)->size() == n + 1);
}

TEST_CASE("orthant decomposition") {
  const auto d = build_decomposition(DecompositionKind::Orthant, 2);
  REQUIRE(d->size() == 4);
  std::size_t found = 0;
  for (const ExponentVec& v : {ExponentVec{1, 1}, ExponentVec{-1, 1}, ExponentVec{1, -1}, ExponentVec{-1, -1}})
    for (std::size_t k = 0; k < 4; ++k) found += d->cone(k).contains(v);
  CHECK(found == 4);
}

TEST_CASE("cone_factorize") {
  const auto d = build_decomposition(DecompositionKind::Standard, 2);
  auto [u0, v0] = cone_factorize(d->cone(0), {2, -1});
  CHECK(u0 == ExponentVec{2, 0});
  CHECK(v0 == ExponentVec{0, 1});
  auto [u2, v2] = cone_factorize(d->cone(2), {0, 1});
  CHECK(u2 == ExponentVec{0, 0});
  CHECK(v2 == ExponentVec{0, -1});
  auto [uz, vz] = cone_factorize(d->cone(1), {0, 0});
  CHECK(uz.is_zero());
  CHECK(vz.is_zero());
}

TEST_CASE("cone_factorize splits every box point") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto d = build_decomposition(DecompositionKind::Standard, n);
    const std::int64_t radius = n == 3 ? 6 : 10;
    for (const Cone& c : d->cones())
      for_each_box_point(ExponentVec(n), radius, [&](const ExponentVec& s) {
        auto [u, v] = cone_factorize(c, s);
        REQUIRE(u - v == s);
        REQUIRE(c.contains(u));
        REQUIRE(c.contains(v));
      });
  }
}

TEST_CASE("shifted cone intersection") {
  const auto d = build_decomposition(DecompositionKind::Standard, 2);
  CHECK(shifted_cone_intersection(d->cone(0), {0, 2}, {1, 0}) == ExponentVec{1, 2});
  // (-4,-3) - (1,2) = (-5,-5) lies in T_2, so b itself generates the meet;
  // (0,-3) is a member but not the generator.
  const ExponentVec g = shifted_cone_intersection(d->cone(2), {1, 2}, {-4, -3});
  CHECK(g == ExponentVec{-4, -3});
  CHECK(d->cone(2).contains(ExponentVec{0, -3} - g));
  CHECK(shifted_cone_intersection(d->cone(1), {3, -1}, {3, -1}) == ExponentVec{3, -1});
}

TEST_CASE("shifted cone intersection agrees with membership") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4), point(-10, 10);
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto d = build_decomposition(DecompositionKind::Standard, n);
    for (const Cone& c : d->cones()) {
      for (int trial = 0; trial < 10; ++trial) {
        ExponentVec a(n), b(n);
        for (std::size_t k = 0; k < n; ++k) a[k] = coord(rng), b[k] = coord(rng);
        const ExponentVec g = shifted_cone_intersection(c, a, b);
        REQUIRE(c.contains(g - a));
        REQUIRE(c.contains(g - b));
        for (int s = 0; s < 200; ++s) {
          ExponentVec x(n);
          for (std::size_t k = 0; k < n; ++k) x[k] = point(rng);
          CHECK((c.contains(x - a) && c.contains(x - b)) == c.contains(x - g));
        }
      }
    }
  }
}

TEST_CASE("Hilbert basis of a non-unimodular cone") {
  // {x >= 0, x <= 2y}: rays (0,1) and (2,1), Hilbert basis adds (1,1).
  const Cone c = Cone::from_halfspaces(0, 2, {ExponentVec{1, 0}, ExponentVec{-1, 2}});
  CHECK_FALSE(c.is_unimodular());
  CHECK(c.generators().size() == 3);
  CHECK(is_pointed(c));
  CHECK(c.contains(c.interior_point()));

  const auto meet = shifted_cone_meet(c, {0, 0}, {1, 0});
  for_each_box_point(ExponentVec(2), 6, [&](const ExponentVec& x) {
    const bool member = c.contains(x) && c.contains(x - ExponentVec{1, 0});
    bool generated = false;
    for (const auto& g : meet) generated = generated || c.contains(x - g);
    CHECK(member == generated);
  });
}

TEST_CASE("push_into_cone and minimal_elements") {
  const auto d = build_decomposition(DecompositionKind::Standard, 2);
  const Cone& c = d->cone(1);
  const std::vector<ExponentVec> pts{{3, 1}, {-2, 5}, {0, -4}};
  const ExponentVec t = push_into_cone(c, pts);
  for (const auto& p : pts) CHECK(c.contains(p + t));
  const auto mins = minimal_elements(d->cone(0), {{1, 1}, {2, 1}, {0, 3}, {1, 1}});
  CHECK(mins == std::vector<ExponentVec>{{0, 3}, {1, 1}});
}

TEST_CASE("validate_decomposition") {
  CHECK(validate_decomposition(*build_decomposition(DecompositionKind::Standard, 2), 5).ok());
  CHECK(validate_decomposition(*build_decomposition(DecompositionKind::Orthant, 3), 4).ok());

  const auto orthants = build_decomposition(DecompositionKind::Orthant, 2);
  std::vector<Cone> three(orthants->cones().begin(), orthants->cones().begin() + 3);
  const ConicDecomposition missing(2, DecompositionKind::Custom, three);
  const DecompositionReport report = validate_decomposition(missing, 3);
  CHECK_FALSE(report.covered);
  REQUIRE_FALSE(report.uncovered.empty());
  const ExponentVec hole = report.uncovered.front();
  for (const Cone& c : three) CHECK_FALSE(c.contains(hole));
}

TEST_CASE("group generation") {
  CHECK(generates_lattice(std::vector<ExponentVec>{{1, 0}, {-1, -1}}, 2));
  CHECK_FALSE(generates_lattice(std::vector<ExponentVec>{{2, 0}, {0, 1}}, 2));
}
