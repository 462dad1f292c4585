#include "rankrange/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rankrange/errors.hpp"
#include "rankrange/kregular.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange {

namespace {

constexpr double kRoundTripTol = 1e-7;
constexpr double kMinConeGap = 1e-6;

double cross(CPoint a, CPoint b) { return std::imag(std::conj(a) * b); }

double turn_angle(CPoint in, CPoint out) { return std::arg(out / in); }

}  // namespace

PolygonSpec polygon_to_support(std::span<const CPoint> vertices, const Tolerance& tol) {
  std::vector<CPoint> pts;
  for (CPoint v : vertices) {
    require_finite(v);
    if (pts.empty() || std::abs(v - pts.back()) > tol.abs) pts.push_back(v);
  }
  while (pts.size() > 1 && std::abs(pts.front() - pts.back()) <= tol.abs) pts.pop_back();
  if (pts.size() < 3) throw Error(ErrorCode::Collinear, "fewer than three distinct vertices");

  double area2 = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) area2 += cross(pts[i], pts[(i + 1) % pts.size()]);
  if (area2 < 0.0) std::reverse(pts.begin(), pts.end());

  // Drop straight vertices until none remain.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::size_t n = pts.size();
      const CPoint in = pts[i] - pts[(i + n - 1) % n];
      const CPoint out = pts[(i + 1) % n] - pts[i];
      if (std::abs(turn_angle(in, out)) < kStraightTurn) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() < 3) throw Error(ErrorCode::Collinear, "vertices are collinear");

  double total = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t n = pts.size();
    const double turn = turn_angle(pts[i] - pts[(i + n - 1) % n], pts[(i + 1) % n] - pts[i]);
    if (turn <= 0.0) throw Error(ErrorCode::NotConvex, "polygon is not convex");
    total += turn;
  }
  if (std::abs(total - kTwoPi) > 1e-6) {
    throw Error(ErrorCode::NotConvex, "vertex list winds more than once");
  }

  PolygonSpec spec;
  spec.vertices = pts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const CPoint edge = pts[(i + 1) % pts.size()] - pts[i];
    const double xi = canonical_angle(std::arg(edge) - kPi / 2.0, tol.angle);
    spec.support.emplace_back(std::real(std::polar(1.0, -xi) * pts[i]), xi);
  }
  return spec;
}

PolygonSpec polygon_from_support(std::span<const HalfPlane> planes, const Tolerance& tol) {
  ConvexRegion region;
  try {
    region = intersect_half_planes(planes, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnboundedRegion) throw;
    throw Error(ErrorCode::NotPolygon, "support half planes leave an unbounded region");
  }
  if (region.kind() != RegionKind::Polygon) {
    throw Error(ErrorCode::NotPolygon, std::string("support half planes give ") +
                                           to_string(region.kind()));
  }
  return polygon_to_support(region.vertices(), tol);
}

SynthesisOutput synthesize(const PolygonSpec& polygon, std::size_t k, const Tolerance& tol) {
  if (k < 1) throw Error(ErrorCode::BadRank, "rank k must be positive");
  if (polygon.support.size() < 3 || polygon.vertices.size() < 3) {
    throw Error(ErrorCode::NotPolygon, "polygon needs at least three sides");
  }

  std::vector<double> sides;
  for (const HalfPlane& h : polygon.support) sides.push_back(h.xi);
  const DirectionSet ds(sides);
  const ExtensionResult ext = minimal_extension(ds, k);

  std::vector<HalfPlane> planes = polygon.support;
  for (double xi : ext.added) {
    double d = -std::numeric_limits<double>::infinity();
    for (CPoint v : polygon.vertices) d = std::max(d, std::real(std::polar(1.0, -xi) * v));
    planes.emplace_back(d, xi);
  }
  std::sort(planes.begin(), planes.end(),
            [](const HalfPlane& a, const HalfPlane& b) { return a.xi < b.xi; });

  const std::size_t n = planes.size();
  std::vector<CPoint> values;
  values.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const HalfPlane& first = planes[r];
    const HalfPlane& second = planes[(r + k) % n];
    const double gap = ccw_angle(first.xi, second.xi);
    if (gap <= kMinConeGap || gap >= kPi - kMinConeGap) {
      throw Error(ErrorCode::VerificationFailed, "directions too close to form a cone");
    }
    const CPoint i(0.0, 1.0);
    values.push_back(i / std::sin(gap) *
                     (std::polar(1.0, first.xi) * second.d - std::polar(1.0, second.xi) * first.d));
  }

  SynthesisOutput out;
  out.spectrum = NormalSpectrum::from_values(values, tol);
  out.n = n;
  out.q = ext.q;
  out.added = ext.added;
  for (const HalfPlane& h : planes) {
    out.directions.push_back(h.xi);
    out.offsets.push_back(h.d);
  }

  const ConvexRegion target = ConvexRegion::polygon(polygon.vertices);
  if (!region_equal(lambda_k(out.spectrum, k, tol), target, kRoundTripTol)) {
    throw Error(ErrorCode::VerificationFailed, "synthesized spectrum misses the polygon");
  }
  return out;
}

SynthesisOutput synthesize_degenerate(CPoint a1, CPoint a2, std::size_t k, const Tolerance& tol) {
  if (k < 1) throw Error(ErrorCode::BadRank, "rank k must be positive");
  require_finite(a1);
  require_finite(a2);

  std::vector<Eigenvalue> entries{{a1, k}};
  ConvexRegion target = ConvexRegion::point(a1);
  if (std::abs(a1 - a2) > tol.abs) {
    entries.push_back({a2, k});
    target = ConvexRegion::segment(a1, a2);
  }
  SynthesisOutput out;
  out.spectrum = NormalSpectrum::from_entries(entries, tol);
  out.n = out.spectrum.dimension();
  if (!region_equal(lambda_k(out.spectrum, k, tol), target, kRoundTripTol)) {
    throw Error(ErrorCode::VerificationFailed, "degenerate synthesis failed");
  }
  return out;
}

NormalSpectrum prune_spectrum(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol) {
  const ConvexRegion range = lambda_k(sp, k, tol);
  if (range.is_empty()) return sp;

  std::vector<Eigenvalue> kept;
  for (const Eigenvalue& e : sp.entries()) {
    const bool inside = range.contains(e.value, tol.abs);
    const bool extreme = std::any_of(range.vertices().begin(), range.vertices().end(),
                                     [&](CPoint v) { return std::abs(v - e.value) <= tol.abs; });
    if (!inside || extreme) kept.push_back(e);
  }
  if (kept.size() == sp.distinct()) return sp;

  NormalSpectrum pruned = NormalSpectrum::from_entries(kept, tol);
  if (pruned.dimension() < k ||
      !region_equal(lambda_k(pruned, k, tol), range, kRoundTripTol)) {
    throw Error(ErrorCode::VerificationFailed, "pruning changed the range");
  }
  return pruned;
}

std::size_t dimension_bound(std::size_t p, std::size_t k) {
  if (p < 3) throw Error(ErrorCode::InvalidInput, "polygon needs at least three sides");
  if (k < 1) throw Error(ErrorCode::BadRank, "rank k must be positive");
  return std::max(2 * k + 2, p + k - 1);
}

}  // namespace rankrange
