#include <doctest.h>

#include <algorithm>
#include <random>

#include "rankrange/errors.hpp"
#include "rankrange/oracle.hpp"
#include "rankrange/rank_range.hpp"
#include "support.hpp"

using namespace rankrange;
using testing::spectrum;

namespace {

const CPoint I(0.0, 1.0);

std::size_t index_of(const NormalSpectrum& sp, CPoint z) {
  for (std::size_t i = 0; i < sp.distinct(); ++i) {
    if (std::abs(sp.value(i) - z) < 1e-9) return i;
  }
  FAIL("value not in spectrum");
  return 0;
}

NormalSpectrum doubled_corners() { return spectrum({0.0, 0.0, 1.0, 1.0, I}); }
NormalSpectrum square_cross() { return spectrum({1.0, -1.0, I, -I}); }

NormalSpectrum nested_crosses() {
  std::vector<CPoint> v;
  for (double r : {1.0, 2.0, 3.0}) {
    for (CPoint u : {CPoint(1.0), I, CPoint(-1.0), -I}) v.push_back(r * u);
  }
  return spectrum(v);
}

bool has_vertex(const ConvexRegion& r, CPoint z, double tol) {
  return std::any_of(r.vertices().begin(), r.vertices().end(),
                     [&](CPoint v) { return std::abs(v - z) <= tol; });
}

}  // namespace

TEST_CASE("side counts split on-line eigenvalues from both open sides") {
  const NormalSpectrum sp = doubled_corners();
  const SideCounts c = count_sides(sp, 0.0, 1.0);
  CHECK(c.left == 1);
  CHECK(c.right == 0);
  CHECK(c.on_line == 4);
}

TEST_CASE("reduced candidates for the square cross include both diagonals both ways") {
  const NormalSpectrum sp = square_cross();
  const CandidateSet s0 = build_s0(sp, 2);
  const std::size_t p1 = index_of(sp, 1.0), m1 = index_of(sp, -1.0);
  const std::size_t pi = index_of(sp, I), mi = index_of(sp, -I);
  CHECK(s0.has(p1, m1));
  CHECK(s0.has(m1, p1));
  CHECK(s0.has(pi, mi));
  CHECK(s0.has(mi, pi));
}

TEST_CASE("reduced candidates for ninth roots join each root to the one two steps on") {
  const NormalSpectrum sp = spectrum(testing::roots(9));
  const CandidateSet s0 = build_s0(sp, 2);
  for (int j = 0; j < 9; ++j) {
    const std::size_t r = index_of(sp, testing::unit(kTwoPi * j / 9));
    const std::size_t s = index_of(sp, testing::unit(kTwoPi * ((j + 2) % 9) / 9));
    CHECK(s0.has(r, s));
  }
}

TEST_CASE("reduced candidates for a triangle at rank one are its counter-clockwise edges") {
  const NormalSpectrum sp = spectrum({0.0, 1.0, I});
  const CandidateSet s0 = build_s0(sp, 1);
  CHECK(s0.pairs.size() == 3);
  const std::size_t a = index_of(sp, 0.0), b = index_of(sp, 1.0), c = index_of(sp, I);
  CHECK(s0.has(a, b));
  CHECK(s0.has(b, c));
  CHECK(s0.has(c, a));
}

TEST_CASE("rank outside the valid window is rejected") {
  const NormalSpectrum sp = square_cross();
  CHECK_THROWS_AS(build_s0(sp, 4), Error);
  CHECK_THROWS_AS(build_s0(sp, 0), Error);
  CHECK_THROWS_AS(lambda_k(sp, 5), Error);
  try {
    lambda_k(sp, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadRank);
  }
}

TEST_CASE("doubled corners give the unit segment at rank two") {
  const ConvexRegion r = lambda_k(doubled_corners(), 2);
  REQUIRE(r.kind() == RegionKind::Segment);
  CHECK(region_equal(r, ConvexRegion::segment(0.0, 1.0), 1e-9));
}

TEST_CASE("doubled corners give nothing at rank three") {
  CHECK(lambda_k(doubled_corners(), 3).is_empty());
}

TEST_CASE("the square cross collapses to the origin at rank two") {
  const ConvexRegion r = lambda_k(square_cross(), 2);
  REQUIRE(r.kind() == RegionKind::Point);
  CHECK(std::abs(r.vertices()[0]) < 1e-9);
}

TEST_CASE("nested crosses: inner cross interior at rank two, vertices at rank three") {
  const NormalSpectrum sp = nested_crosses();
  const ConvexRegion two = lambda_k(sp, 2);
  const ConvexRegion three = lambda_k(sp, 3);
  REQUIRE(two.kind() == RegionKind::Polygon);
  REQUIRE(three.kind() == RegionKind::Polygon);
  for (CPoint u : {CPoint(1.0), I, CPoint(-1.0), -I}) {
    CHECK(two.contains(u));
    CHECK(two.boundary_distance(u) > 1e-6);
    CHECK(has_vertex(three, u, 1e-9));
  }
}

TEST_CASE("ninth roots at rank three match the rotated support description") {
  const ConvexRegion r = lambda_k(spectrum(testing::roots(9)), 3);
  std::vector<HalfPlane> hs;
  for (int j = 0; j < 9; ++j) hs.emplace_back(std::cos(kPi / 3), (2 * j + 3) * kPi / 9);
  CHECK(region_equal(r, intersect_half_planes(hs), 1e-9));
}

TEST_CASE("roots of unity at the second-largest rank are empty or a point") {
  for (int n = 4; n <= 9; ++n) {
    const NormalSpectrum sp = spectrum(testing::roots(n));
    const ConvexRegion r = lambda_k(sp, n - 1);
    CHECK((r.is_empty() || r.kind() == RegionKind::Point));
    CHECK(region_equal(r, oracle::hull_intersection(sp, n - 1), 1e-9));
  }
}

TEST_CASE("full rank is a point only for scalar spectra") {
  const std::vector<Eigenvalue> e{{2.0 + I, 3}};
  const ConvexRegion r = lambda_k(NormalSpectrum::from_entries(e), 3);
  REQUIRE(r.kind() == RegionKind::Point);
  CHECK(std::abs(r.vertices()[0] - (2.0 + I)) < 1e-12);
  CHECK(lambda_k(square_cross(), 4).is_empty());
}

TEST_CASE("real spectra give the interval between the k-th values from each end") {
  const NormalSpectrum sp = spectrum({3.0, 2.0, 1.0, 0.0});
  CHECK(region_equal(lambda_k(sp, 2), ConvexRegion::segment(1.0, 2.0)));
  CHECK(region_equal(lambda_k(sp, 1), ConvexRegion::segment(0.0, 3.0)));
  CHECK(lambda_k(sp, 3).is_empty());
  const NormalSpectrum odd = spectrum({3.0, 2.0, 1.0});
  CHECK(region_equal(lambda_k(odd, 2), ConvexRegion::point(2.0)));
}

TEST_CASE("line-confined range with a synthetic candidate family") {
  const NormalSpectrum sp = spectrum({0.0, 0.0, 1.0, 1.0});
  CandidateSet s0;
  const std::size_t a = index_of(sp, 0.0), b = index_of(sp, 1.0);
  s0.pairs.push_back({a, b, half_plane_from_pair(0.0, 1.0)});
  s0.pairs.push_back({b, a, half_plane_from_pair(1.0, 0.0)});
  const ConvexRegion r = line_confined_range(sp, 2, a, b, s0);
  CHECK(region_equal(r, ConvexRegion::segment(0.0, 1.0)));
}

TEST_CASE("line-confined range on doubled corners") {
  const NormalSpectrum sp = doubled_corners();
  const CandidateSet s0 = build_s0(sp, 2);
  const std::size_t a = index_of(sp, 0.0), b = index_of(sp, 1.0);
  REQUIRE(s0.has(a, b));
  REQUIRE(s0.has(b, a));
  CHECK(region_equal(line_confined_range(sp, 2, a, b, s0), ConvexRegion::segment(0.0, 1.0)));
}

TEST_CASE("line-confined range with a crossing pair above and below") {
  const NormalSpectrum sp = spectrum({0.0, 0.0, 2.0, 2.0, 1.0 + I, 1.0 - I});
  const ConvexRegion r = lambda_k(sp, 2);
  CHECK(region_equal(r, oracle::hull_intersection(sp, 2), 1e-9));
  CHECK(r.kind() == RegionKind::Segment);
}

TEST_CASE("pivot reduction on the square cross") {
  const NormalSpectrum sp = square_cross();
  const ConvexRegion r = pivot_reduced_range(sp, 2, build_s0(sp, 2));
  REQUIRE(r.kind() == RegionKind::Point);
  CHECK(std::abs(r.vertices()[0]) < 1e-9);
}

TEST_CASE("equilateral triangle at rank two is empty") {
  const NormalSpectrum sp = spectrum(testing::roots(3));
  CHECK(lambda_k(sp, 2).is_empty());
  CHECK(pivot_reduced_range(sp, 2, build_s0(sp, 2)).is_empty());
}

TEST_CASE("regular pentagon at rank two is a pentagon") {
  const NormalSpectrum sp = spectrum(testing::roots(5));
  const ConvexRegion r = pivot_reduced_range(sp, 2, build_s0(sp, 2));
  REQUIRE(r.kind() == RegionKind::Polygon);
  CHECK(r.vertices().size() == 5);
  CHECK(region_equal(r, oracle::hull_intersection(sp, 2), 1e-9));
}

TEST_CASE("minimal family for ninth roots at rank two has nine planes") {
  const NormalSpectrum sp = spectrum(testing::roots(9));
  const CandidateSet t = minimal_half_planes(sp, 2);
  CHECK(t.pairs.size() == 9);
  CHECK(t.tag == CandidateTag::Minimal);
  CHECK(region_equal(intersect_half_planes(t.planes()), lambda_k(sp, 2), 1e-9));
}

TEST_CASE("minimal family for nested crosses at rank three") {
  const NormalSpectrum sp = nested_crosses();
  const CandidateSet t = minimal_half_planes(sp, 3);
  CHECK(t.pairs.size() <= 12);
  const ConvexRegion r = lambda_k(sp, 3);
  CHECK(region_equal(intersect_half_planes(t.planes()), r, 1e-9));
  for (const CandidatePair& c : t.pairs) {
    const auto on = std::count_if(r.vertices().begin(), r.vertices().end(),
                                  [&](CPoint v) { return c.plane.on_boundary(v, 1e-9); });
    CHECK(on >= 2);
  }
}

TEST_CASE("minimal family for a triangle at rank one is its three edges") {
  CHECK(minimal_half_planes(spectrum({0.0, 1.0, I}), 1).pairs.size() == 3);
}

TEST_CASE("minimal family needs a polygon") {
  try {
    minimal_half_planes(doubled_corners(), 2);
    FAIL("expected NotPolygon");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPolygon);
  }
}

TEST_CASE("closed-count pairs contain the range") {
  std::mt19937 rng(41);
  for (int it = 0; it < 100; ++it) {
    const NormalSpectrum sp = NormalSpectrum::from_values(testing::random_gaussian_values(rng, 8));
    for (std::size_t k = 1; k < sp.dimension(); ++k) {
      const ConvexRegion r = lambda_k(sp, k);
      const CandidateSet s = build_closed_pairs(sp, k);
      CHECK(s.tag == CandidateTag::All);
      for (const CandidatePair& c : s.pairs) {
        for (CPoint v : r.vertices()) CHECK(c.plane.contains(v, 1e-9));
      }
    }
  }
}
