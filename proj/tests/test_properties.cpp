#include <doctest.h>

#include <algorithm>
#include <random>

#include "rankrange/errors.hpp"
#include "rankrange/kregular.hpp"
#include "rankrange/oracle.hpp"
#include "rankrange/rank_range.hpp"
#include "support.hpp"

using namespace rankrange;

namespace {

NormalSpectrum draw(std::mt19937& rng, int it, int max_n) {
  const auto values = it % 2 ? testing::random_lattice_values(rng, max_n)
                             : testing::random_gaussian_values(rng, max_n);
  return NormalSpectrum::from_values(values);
}

// Every open half circle of the whole circle, starting anywhere, holds at
// least k members. Arcs only change content at members and their antipodes,
// so starts just past those points cover all cases.
bool semicircles_hold(const std::vector<double>& xs, std::size_t k) {
  if (k == 0) return true;
  if (xs.empty()) return false;
  std::vector<double> starts;
  for (double x : xs) {
    for (double base : {x, x + kPi}) {
      for (double eps : {-1e-7, 0.0, 1e-7}) starts.push_back(base + eps);
    }
  }
  for (double a : starts) {
    std::size_t inside = 0;
    for (double x : xs) {
      const double off = ccw_angle(a, x);
      if (off > 1e-9 && off < kPi - 1e-9) ++inside;
    }
    if (inside < k) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("range matches the hull oracle on random spectra") {
  std::mt19937 rng(101);
  for (int it = 0; it < 300; ++it) {
    const NormalSpectrum sp = draw(rng, it, 10);
    for (std::size_t k = 1; k <= sp.dimension(); ++k) {
      CHECK(region_equal(lambda_k(sp, k), oracle::hull_intersection(sp, k), 1e-7));
    }
  }
}

TEST_CASE("ranges shrink as the rank grows") {
  std::mt19937 rng(103);
  for (int it = 0; it < 200; ++it) {
    const NormalSpectrum sp = draw(rng, it, 10);
    for (std::size_t k = 1; k < sp.dimension(); ++k) {
      const ConvexRegion outer = lambda_k(sp, k);
      const ConvexRegion inner = lambda_k(sp, k + 1);
      for (CPoint v : inner.vertices()) CHECK(outer.contains(v, 1e-9));
    }
  }
}

TEST_CASE("rank one is the hull of the eigenvalues") {
  std::mt19937 rng(107);
  for (int it = 0; it < 200; ++it) {
    const NormalSpectrum sp = draw(rng, it, 10);
    const auto values = sp.distinct_values();
    CHECK(region_equal(lambda_k(sp, 1), convex_hull(values), 1e-9));
  }
}

TEST_CASE("minimal families stay within the plane-count bound") {
  std::mt19937 rng(109);
  for (int it = 0; it < 200; ++it) {
    const NormalSpectrum sp = draw(rng, it, 10);
    for (std::size_t k = 1; k < sp.dimension(); ++k) {
      const ConvexRegion r = lambda_k(sp, k);
      if (r.kind() != RegionKind::Polygon) continue;
      const CandidateSet t = minimal_half_planes(sp, k);
      CHECK(t.pairs.size() <= std::max<std::size_t>(sp.distinct(), 4));
      CHECK(region_equal(intersect_half_planes(t.planes()), r, 1e-7));
      for (std::size_t drop = 0; drop < t.pairs.size(); ++drop) {
        std::vector<HalfPlane> rest;
        for (std::size_t i = 0; i < t.pairs.size(); ++i) {
          if (i != drop) rest.push_back(t.pairs[i].plane);
        }
        bool grows = true;
        try {
          grows = !region_equal(intersect_half_planes(rest), r, 1e-7);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::UnboundedRegion);
        }
        CHECK(grows);
      }
    }
  }
}

TEST_CASE("every reduced candidate holds enough eigenvalues on each side") {
  std::mt19937 rng(113);
  for (int it = 0; it < 200; ++it) {
    const NormalSpectrum sp = draw(rng, it, 9);
    const std::size_t n = sp.dimension();
    for (std::size_t k = 1; k < n; ++k) {
      const CandidateSet s0 = build_s0(sp, k);
      CHECK(s0.tag == CandidateTag::Reduced);
      for (const CandidatePair& c : s0.pairs) {
        const SideCounts sc = count_sides(sp, sp.value(c.r), sp.value(c.s));
        CHECK(sc.left + sc.on_line >= n - k + 1);
        CHECK(sc.left + 1 <= n - k);
        CHECK(c.plane.on_boundary(sp.value(c.r)));
        CHECK(c.plane.on_boundary(sp.value(c.s)));
      }
    }
  }
}

TEST_CASE("member-anchored regularity agrees with every half circle") {
  std::mt19937 rng(127);
  for (int it = 0; it < 400; ++it) {
    DirectionSet ds;
    try {
      ds = DirectionSet(testing::random_directions(rng, 1 + static_cast<int>(rng() % 10)));
    } catch (const Error&) {
      continue;
    }
    for (std::size_t k = 0; k <= 5; ++k) {
      CHECK(is_k_regular(ds, k) == semicircles_hold(ds.angles(), k));
    }
  }
}

TEST_CASE("extensions agree with the half-circle definition") {
  std::mt19937 rng(131);
  int tried = 0;
  while (tried < 100) {
    DirectionSet ds;
    try {
      ds = DirectionSet(testing::random_directions(rng, 3 + static_cast<int>(rng() % 6)));
    } catch (const Error&) {
      continue;
    }
    if (!is_k_regular(ds, 1)) continue;
    ++tried;
    const std::size_t k = 1 + rng() % 4;
    const DirectionSet full = ds.with(minimal_extension(ds, k).added);
    CHECK(semicircles_hold(full.angles(), k));
  }
}
