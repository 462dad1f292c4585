#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rankrange {

using CPoint = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Absolute tolerance on coordinates/offsets and angular tolerance on
/// normal directions. Every geometric predicate in the library takes one.
struct Tolerance {
  double abs = 1e-9;
  double angle = 1e-12;
};

/// Throws InvalidInput when either coordinate is NaN or infinite.
CPoint require_finite(CPoint z);

/// Maps any angle into [0, 2π); values within `angle_tol` of 2π snap to 0.
double canonical_angle(double xi, double angle_tol = 1e-12);

/// Counter-clockwise distance from `from` to `to`, in [0, 2π).
double ccw_angle(double from, double to);

/// Closed half plane { z : Re(e^{-i xi} z) <= d }. `xi` is the outward
/// normal direction, `d` the support offset. When built from an ordered pair
/// of eigenvalues, `source` records their indices.
struct HalfPlane {
  double d = 0.0;
  double xi = 0.0;
  std::optional<std::pair<std::size_t, std::size_t>> source;

  HalfPlane() = default;
  HalfPlane(double offset, double normal_angle);

  CPoint normal() const { return std::polar(1.0, xi); }
  /// Re(e^{-i xi} z) - d: negative inside, positive outside.
  double excess(CPoint z) const;
  bool contains(CPoint z, double tol = 1e-9) const { return excess(z) <= tol; }
  bool on_boundary(CPoint z, double tol = 1e-9) const;
};

/// Left closed half plane of the directed line through a then b.
HalfPlane half_plane_from_pair(CPoint a, CPoint b, const Tolerance& tol = {});

enum class RegionKind { Empty, Point, Segment, Polygon };

const char* to_string(RegionKind kind);

/// Result of a half-plane intersection or hull: empty, a point, a segment,
/// or a strictly convex CCW polygon. The payload lives in `vertices()`:
/// 0, 1, 2 or >=3 points respectively.
class ConvexRegion {
 public:
  ConvexRegion() = default;

  static ConvexRegion empty() { return ConvexRegion(); }
  static ConvexRegion point(CPoint p);
  static ConvexRegion segment(CPoint a, CPoint b);
  /// Takes the vertices as given; use `convex_hull` to classify raw points.
  static ConvexRegion polygon(std::vector<CPoint> ccw_vertices);

  RegionKind kind() const { return kind_; }
  bool is_empty() const { return kind_ == RegionKind::Empty; }
  const std::vector<CPoint>& vertices() const { return vertices_; }

  bool contains(CPoint z, double tol = 1e-9) const;
  double area() const;
  /// Distance from z to the region's boundary (the whole set for degenerate
  /// regions). Zero on the boundary.
  double boundary_distance(CPoint z) const;
  /// max over the region of Re(e^{-i xi} z). Undefined for Empty.
  double support(double xi) const;

  /// Supporting half planes whose intersection is exactly this region.
  std::vector<HalfPlane> to_half_planes() const;

 private:
  ConvexRegion(RegionKind kind, std::vector<CPoint> vertices)
      : kind_(kind), vertices_(std::move(vertices)) {}

  RegionKind kind_ = RegionKind::Empty;
  std::vector<CPoint> vertices_;
};

/// Axis-aligned box used for clipping unbounded intersections (plotting).
struct ClipBox {
  CPoint lo;
  CPoint hi;
};

/// Intersection of finitely many closed half planes. Throws UnboundedRegion
/// when the normals leave a gap of π or more, unless `clip_box` is given, in
/// which case the intersection is clipped against it.
ConvexRegion intersect_half_planes(std::span<const HalfPlane> hs,
                                   const Tolerance& tol = {},
                                   std::optional<ClipBox> clip_box = std::nullopt);

/// Classified convex hull: collinear inputs give Segment or Point.
ConvexRegion convex_hull(std::span<const CPoint> pts, const Tolerance& tol = {});

/// Same kind and payloads equal up to cyclic rotation (and endpoint order for
/// segments), coordinate-wise within `tol`.
bool region_equal(const ConvexRegion& r1, const ConvexRegion& r2, double tol = 1e-9);

/// Intersection point of the boundary lines of two half planes, if they are
/// not parallel.
std::optional<CPoint> boundary_intersection(const HalfPlane& h1, const HalfPlane& h2);

}  // namespace rankrange
