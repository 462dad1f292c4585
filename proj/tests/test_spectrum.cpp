#include <doctest.h>

#include <random>

#include "rankrange/errors.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/spectrum.hpp"
#include "support.hpp"

using namespace rankrange;

namespace {

const CPoint I(0.0, 1.0);

std::size_t multiplicity_of(const NormalSpectrum& sp, CPoint z) {
  for (const Eigenvalue& e : sp.entries()) {
    if (std::abs(e.value - z) < 1e-9) return e.multiplicity;
  }
  return 0;
}

ConvexRegion map_region(const ConvexRegion& r, CPoint mu, CPoint shift) {
  std::vector<CPoint> pts;
  for (CPoint v : r.vertices()) pts.push_back(mu * v + shift);
  switch (r.kind()) {
    case RegionKind::Empty: return ConvexRegion::empty();
    case RegionKind::Point: return ConvexRegion::point(pts[0]);
    case RegionKind::Segment: return ConvexRegion::segment(pts[0], pts[1]);
    case RegionKind::Polygon: return convex_hull(pts);
  }
  return {};
}

}  // namespace

TEST_CASE("repeated eigenvalues collapse into multiplicities") {
  const std::vector<CPoint> v{0.0, 0.0, 1.0, 1.0, I};
  const NormalSpectrum sp = NormalSpectrum::from_values(v);
  CHECK(sp.dimension() == 5);
  CHECK(sp.distinct() == 3);
  CHECK(multiplicity_of(sp, 0.0) == 2);
  CHECK(multiplicity_of(sp, 1.0) == 2);
  CHECK(multiplicity_of(sp, I) == 1);
  CHECK(sp.expanded().size() == 5);
}

TEST_CASE("values within tolerance merge to their mean") {
  const std::vector<CPoint> v{1.0, 1.0 + 1e-12};
  const NormalSpectrum sp = NormalSpectrum::from_values(v);
  REQUIRE(sp.distinct() == 1);
  CHECK(sp.dimension() == 2);
  CHECK(sp.value(0).real() == doctest::Approx(1.0 + 5e-13).epsilon(1e-15));
}

TEST_CASE("the square cross keeps four distinct values") {
  const NormalSpectrum sp = testing::spectrum({1.0, I, -1.0, -I});
  CHECK(sp.dimension() == 4);
  CHECK(sp.distinct() == 4);
}

TEST_CASE("entries with explicit multiplicities") {
  const std::vector<Eigenvalue> e{{2.0, 3}, {2.0, 1}, {I, 2}};
  const NormalSpectrum sp = NormalSpectrum::from_entries(e);
  CHECK(sp.dimension() == 6);
  CHECK(multiplicity_of(sp, 2.0) == 4);
  CHECK_THROWS_AS(NormalSpectrum::from_entries(std::vector<Eigenvalue>{{1.0, 0}}), Error);
  CHECK_THROWS_AS(NormalSpectrum::from_values(std::vector<CPoint>{}), Error);
}

TEST_CASE("single value is scalar") {
  const std::vector<Eigenvalue> e{{5.0, 3}};
  const NormalSpectrum sp = NormalSpectrum::from_entries(e);
  REQUIRE(std::holds_alternative<ScalarSpectrum>(collinearity(sp)));
  CHECK(std::get<ScalarSpectrum>(collinearity(sp)).value == CPoint(5.0));
}

TEST_CASE("real values are collinear along the real axis") {
  const NormalSpectrum sp = testing::spectrum({3.0, 2.0, 1.0, 0.0});
  const Collinearity c = collinearity(sp);
  REQUIRE(std::holds_alternative<CollinearSpectrum>(c));
  const auto& line = std::get<CollinearSpectrum>(c);
  CHECK(line.angle == doctest::Approx(0.0));
  REQUIRE(line.offsets.size() == 4);
  CHECK(line.offsets[0] == doctest::Approx(3.0));
  CHECK(line.offsets[3] == doctest::Approx(0.0));
  CHECK(std::abs(line.at(line.offsets[1]) - 2.0) < 1e-12);
}

TEST_CASE("collinear offsets repeat with multiplicity") {
  const NormalSpectrum sp = testing::spectrum({I, I, 1.0 + 2.0 * I, -1.0});
  const Collinearity c = collinearity(sp);
  REQUIRE(std::holds_alternative<CollinearSpectrum>(c));
  CHECK(std::get<CollinearSpectrum>(c).offsets.size() == 4);
}

TEST_CASE("the square cross is in general position") {
  const NormalSpectrum sp = testing::spectrum({1.0, I, -1.0, -I});
  CHECK(std::holds_alternative<GeneralSpectrum>(collinearity(sp)));
}

TEST_CASE("affine maps act on every eigenvalue") {
  const NormalSpectrum a = transform(testing::spectrum({1.0, -1.0}), I, 0.0);
  CHECK(multiplicity_of(a, I) == 1);
  CHECK(multiplicity_of(a, -I) == 1);

  const NormalSpectrum b = transform(testing::spectrum({0.0, 1.0}), 2.0, 1.0);
  CHECK(multiplicity_of(b, 1.0) == 1);
  CHECK(multiplicity_of(b, 3.0) == 1);

  const std::vector<Eigenvalue> e{{1.0, 2}};
  const NormalSpectrum c = transform(NormalSpectrum::from_entries(e), 3.0, I);
  CHECK(multiplicity_of(c, 3.0 + I) == 2);
}

TEST_CASE("a vanishing scale is rejected") {
  try {
    transform(testing::spectrum({1.0}), 1e-12, 0.0);
    FAIL("expected DegenerateScale");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateScale);
  }
}

TEST_CASE("rotating the square cross keeps its rank-two range at the origin") {
  const NormalSpectrum sp = transform(testing::spectrum({1.0, I, -1.0, -I}),
                                      std::polar(1.0, kPi / 4), 0.0);
  const ConvexRegion r = lambda_k(sp, 2);
  REQUIRE(r.kind() == RegionKind::Point);
  CHECK(std::abs(r.vertices()[0]) < 1e-9);
}

TEST_CASE("the range follows affine maps of the spectrum") {
  std::mt19937 rng(31);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int it = 0; it < 150; ++it) {
    const auto values = it % 2 ? testing::random_lattice_values(rng, 8)
                               : testing::random_gaussian_values(rng, 8);
    const NormalSpectrum sp = NormalSpectrum::from_values(values);
    const CPoint mu(g(rng), g(rng));
    const CPoint shift(g(rng), g(rng));
    if (std::abs(mu) < 0.1) continue;
    const NormalSpectrum moved = transform(sp, mu, shift);
    for (std::size_t k = 1; k <= sp.dimension(); ++k) {
      const ConvexRegion expected = map_region(lambda_k(sp, k), mu, shift);
      CHECK(region_equal(lambda_k(moved, k), expected, 1e-7));
    }
  }
}

TEST_CASE("construction ignores input order") {
  std::mt19937 rng(37);
  for (int it = 0; it < 100; ++it) {
    auto values = testing::random_lattice_values(rng, 9);
    const NormalSpectrum a = NormalSpectrum::from_values(values);
    std::shuffle(values.begin(), values.end(), rng);
    const NormalSpectrum b = NormalSpectrum::from_values(values);
    REQUIRE(a.distinct() == b.distinct());
    for (std::size_t i = 0; i < a.distinct(); ++i) {
      CHECK(std::abs(a.value(i) - b.value(i)) < 1e-12);
      CHECK(a[i].multiplicity == b[i].multiplicity);
    }
  }
}
