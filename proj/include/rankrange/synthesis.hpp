#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankrange/geometry.hpp"
#include "rankrange/spectrum.hpp"

namespace rankrange {

/// A convex polygon held both as one supporting half plane per side and as
/// its CCW vertex list.
struct PolygonSpec {
  std::vector<HalfPlane> support;
  std::vector<CPoint> vertices;
};

/// Turns below this angle count as straight when reading a vertex list.
inline constexpr double kStraightTurn = 1e-7;

/// One half plane per edge of a strictly convex polygon. Clockwise input is
/// reversed; straight vertices are dropped. Throws NotConvex or Collinear.
PolygonSpec polygon_to_support(std::span<const CPoint> vertices, const Tolerance& tol = {});

/// Intersects the given half planes and keeps only those carrying a side.
/// Throws NotPolygon if the intersection is not a non-degenerate polygon.
PolygonSpec polygon_from_support(std::span<const HalfPlane> planes, const Tolerance& tol = {});

struct SynthesisOutput {
  NormalSpectrum spectrum;
  std::size_t n = 0;
  std::size_t q = 0;
  /// Final sorted direction set and matching support offsets.
  std::vector<double> directions;
  std::vector<double> offsets;
  /// Directions added to the polygon's own side normals.
  std::vector<double> added;
};

/// Smallest normal spectrum whose rank-k range is the polygon. The result is
/// checked against `lambda_k`; throws VerificationFailed if it disagrees.
SynthesisOutput synthesize(const PolygonSpec& polygon, std::size_t k, const Tolerance& tol = {});

/// Smallest spectrum whose rank-k range is the segment [a1, a2], or the point
/// a1 when the two coincide.
SynthesisOutput synthesize_degenerate(CPoint a1, CPoint a2, std::size_t k,
                                      const Tolerance& tol = {});

/// Drops eigenvalues that lie in the rank-k range without being extreme
/// points of it. The range is unchanged.
NormalSpectrum prune_spectrum(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol = {});

/// Upper bound on the synthesized dimension for a p-sided polygon.
std::size_t dimension_bound(std::size_t p, std::size_t k);

}  // namespace rankrange
