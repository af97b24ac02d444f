#include <doctest.h>

#include "qch/geometry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace qch;

namespace {

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Projective quandle operation followed by canonicalization.
std::optional<ProjectivePoint> proj_op(const ProjectivePoint& x, const ProjectivePoint& y) {
  return project(sphere_op(x.rep, y.rep));
}

}  // namespace

TEST_CASE("sphere operation on axis vectors") {
  std::vector<double> e1{1, 0, 0}, e2{0, 1, 0};
  std::vector<double> r = sphere_op(e1, e2);
  CHECK(r == std::vector<double>{-1, 0, 0});
}

TEST_CASE("sphere operation is idempotent and rejects non-unit input") {
  std::vector<double> e3{0, 0, 1};
  CHECK(sphere_op(e3, e3) == e3);
  CHECK_THROWS_AS(sphere_op({0.5, 0, 0}, e3), std::domain_error);
  CHECK_THROWS_AS(sphere_op(e3, {0, 2, 0}), std::domain_error);
}

TEST_CASE("right translations are involutions within tolerance") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto x = random_unit_vector(rng, 4);
    auto y = random_unit_vector(rng, 4);
    CHECK(dist(sphere_op(sphere_op(x, y), y), x) < 1e-9);
  }
}

TEST_CASE("sphere operation is self-distributive within tolerance") {
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto x = random_unit_vector(rng, 3);
    auto y = random_unit_vector(rng, 3);
    auto z = random_unit_vector(rng, 3);
    auto lhs = sphere_op(sphere_op(x, y), z);
    auto rhs = sphere_op(sphere_op(x, z), sphere_op(y, z));
    CHECK(dist(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("half-space classification scans from the last coordinate") {
  CHECK(classify_halfspace({0, 0, 1}) == Region::Positive);
  CHECK(classify_halfspace({0, 0, -1}) == Region::Negative);
  CHECK(classify_halfspace({0, 1, 0.0}) == Region::Positive);
  CHECK(classify_halfspace({-1, 0.0, 0.0}) == Region::Negative);
  CHECK(classify_halfspace({1, 0, 1e-12}) == Region::Boundary);
  CHECK(classify_halfspace({0.0, 0.0, 0.0}) == Region::Boundary);
}

TEST_CASE("canonicalization identifies antipodes and preserves exact zeros") {
  auto p = project({-0.6, 0.0, -0.8});
  REQUIRE(p.has_value());
  CHECK(p->rep == std::vector<double>{0.6, 0.0, 0.8});
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto v = random_unit_vector(rng, 3);
    std::vector<double> neg(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
    auto a = project(v), b = project(neg);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->rep == b->rep);
  }
}

TEST_CASE("near-boundary points are rejected rather than tie-broken") {
  CHECK_FALSE(project({1, 0, 5e-10}).has_value());
  CHECK(project({1, 0, 0.0}).has_value());
}

TEST_CASE("projective cocycle witness value") {
  auto px = project({1, 0, 0});
  auto py = project({0, 1, 0});
  REQUIRE(px.has_value());
  REQUIRE(py.has_value());
  auto phi = sphere_cocycle(*px, *py);
  REQUIRE(phi.has_value());
  CHECK(*phi == 1);
}

TEST_CASE("projective cocycle vanishes on the diagonal") {
  std::mt19937 rng(10);
  for (int i = 0; i < 50; ++i) {
    auto p = project(random_unit_vector(rng, 3));
    if (!p) continue;
    auto phi = sphere_cocycle(*p, *p);
    REQUIRE(phi.has_value());
    CHECK(*phi == 0);
  }
}

TEST_CASE("sampled cocycle satisfies the untwisted 2-cocycle identity") {
  std::mt19937 rng(11);
  int checked = 0;
  while (checked < 1000) {
    auto x = project(random_unit_vector(rng, 3));
    auto y = project(random_unit_vector(rng, 3));
    auto z = project(random_unit_vector(rng, 3));
    if (!x || !y || !z) continue;
    auto xy = proj_op(*x, *y);
    auto xz = proj_op(*x, *z);
    auto yz = proj_op(*y, *z);
    if (!xy || !xz || !yz) continue;
    auto a = sphere_cocycle(*x, *y);
    auto b = sphere_cocycle(*xy, *z);
    auto c = sphere_cocycle(*x, *z);
    auto e = sphere_cocycle(*xz, *yz);
    if (!a || !b || !c || !e) continue;
    CHECK((*a + *b) % 2 == (*c + *e) % 2);
    ++checked;
  }
}
