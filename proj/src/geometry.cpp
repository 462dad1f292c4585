#include "rankrange/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rankrange/errors.hpp"

namespace rankrange {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::DegenerateScale: return "DegenerateScale";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotOneRegular: return "NotOneRegular";
    case ErrorCode::NotPolygon: return "NotPolygon";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

const char* to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Empty: return "Empty";
    case RegionKind::Point: return "Point";
    case RegionKind::Segment: return "Segment";
    case RegionKind::Polygon: return "Polygon";
  }
  return "Unknown";
}

namespace {

double cross(CPoint o, CPoint a, CPoint b) {
  return std::imag(std::conj(a - o) * (b - o));
}

double line_distance(CPoint a, CPoint b, CPoint p) {
  const double len = std::abs(b - a);
  if (len == 0.0) return std::abs(p - a);
  return std::abs(cross(a, b, p)) / len;
}

double segment_distance(CPoint a, CPoint b, CPoint p) {
  const CPoint ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(std::real(std::conj(ab) * (p - a)) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Polygon vertex together with the index of the constraint whose boundary
// carries the edge arriving at it. Negative labels mark the initial box.
struct LabeledVertex {
  CPoint p;
  long label;
};

constexpr long kBoxLabel = -1;

std::vector<LabeledVertex> clip(const std::vector<LabeledVertex>& poly, const HalfPlane& h,
                                long label, double tol) {
  std::vector<LabeledVertex> out;
  const std::size_t n = poly.size();
  out.reserve(n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    const LabeledVertex& prev = poly[i];
    const LabeledVertex& cur = poly[(i + 1) % n];
    const double sp = h.excess(prev.p);
    const double sc = h.excess(cur.p);
    const bool prev_in = sp <= tol;
    const bool cur_in = sc <= tol;
    if (prev_in && cur_in) {
      out.push_back(cur);
    } else if (prev_in && !cur_in) {
      if (sp < -tol) {
        const CPoint x = prev.p + (cur.p - prev.p) * (sp / (sp - sc));
        out.push_back({x, cur.label});
      }
    } else if (!prev_in && cur_in) {
      if (sc < -tol) {
        const CPoint x = prev.p + (cur.p - prev.p) * (sp / (sp - sc));
        out.push_back({x, label});
        out.push_back(cur);
      } else {
        out.push_back({cur.p, label});
      }
    }
  }
  return out;
}

ConvexRegion classify(std::vector<CPoint> hull, double tol) {
  // hull: CCW, possibly with near-duplicate or near-collinear vertices.
  bool changed = true;
  while (changed && hull.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
      const std::size_t n = hull.size();
      const CPoint prev = hull[(i + n - 1) % n];
      const CPoint next = hull[(i + 1) % n];
      if (std::abs(hull[i] - prev) <= tol || line_distance(prev, next, hull[i]) <= tol) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  double diameter = 0.0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const double dist = std::abs(hull[i] - hull[j]);
      if (dist > diameter) {
        diameter = dist;
        ia = i;
        ib = j;
      }
    }
  }
  if (hull.size() == 1 || diameter <= 10.0 * tol) {
    const CPoint mean = std::accumulate(hull.begin(), hull.end(), CPoint{}) /
                        static_cast<double>(hull.size());
    return ConvexRegion::point(mean);
  }

  double width = 0.0;
  if (hull.size() >= 3) {
    width = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const CPoint a = hull[i];
      const CPoint b = hull[(i + 1) % hull.size()];
      double far = 0.0;
      for (const CPoint& p : hull) far = std::max(far, line_distance(a, b, p));
      width = std::min(width, far);
    }
  }
  if (width <= 10.0 * tol) return ConvexRegion::segment(hull[ia], hull[ib]);
  return ConvexRegion::polygon(std::move(hull));
}

}  // namespace

CPoint require_finite(CPoint z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::InvalidInput, "non-finite coordinate");
  }
  return z;
}

double canonical_angle(double xi, double angle_tol) {
  double a = std::fmod(xi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi - angle_tol) a = 0.0;
  return a;
}

double ccw_angle(double from, double to) {
  double a = std::fmod(to - from, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a -= kTwoPi;
  return a;
}

HalfPlane::HalfPlane(double offset, double normal_angle)
    : d(offset), xi(canonical_angle(normal_angle)) {
  if (!std::isfinite(offset) || !std::isfinite(normal_angle)) {
    throw Error(ErrorCode::InvalidInput, "non-finite half plane");
  }
}

double HalfPlane::excess(CPoint z) const {
  return z.real() * std::cos(xi) + z.imag() * std::sin(xi) - d;
}

bool HalfPlane::on_boundary(CPoint z, double tol) const {
  return std::abs(excess(z)) <= tol;
}

HalfPlane half_plane_from_pair(CPoint a, CPoint b, const Tolerance& tol) {
  require_finite(a);
  require_finite(b);
  if (std::abs(b - a) <= tol.abs) {
    throw Error(ErrorCode::DegenerateLine, "half plane needs two distinct points");
  }
  const double xi = canonical_angle(std::arg(b - a) - kPi / 2.0, tol.angle);
  HalfPlane h;
  h.xi = xi;
  h.d = std::real(std::polar(1.0, -xi) * a);
  return h;
}

std::optional<CPoint> boundary_intersection(const HalfPlane& h1, const HalfPlane& h2) {
  const double c1 = std::cos(h1.xi);
  const double s1 = std::sin(h1.xi);
  const double c2 = std::cos(h2.xi);
  const double s2 = std::sin(h2.xi);
  const double det = c1 * s2 - s1 * c2;
  if (std::abs(det) <= 1e-14) return std::nullopt;
  return CPoint{(h1.d * s2 - h2.d * s1) / det, (c1 * h2.d - c2 * h1.d) / det};
}

ConvexRegion ConvexRegion::point(CPoint p) {
  return ConvexRegion(RegionKind::Point, {require_finite(p)});
}

ConvexRegion ConvexRegion::segment(CPoint a, CPoint b) {
  return ConvexRegion(RegionKind::Segment, {require_finite(a), require_finite(b)});
}

ConvexRegion ConvexRegion::polygon(std::vector<CPoint> ccw_vertices) {
  if (ccw_vertices.size() < 3) {
    throw Error(ErrorCode::InvalidInput, "polygon needs at least 3 vertices");
  }
  for (const CPoint& v : ccw_vertices) require_finite(v);
  return ConvexRegion(RegionKind::Polygon, std::move(ccw_vertices));
}

bool ConvexRegion::contains(CPoint z, double tol) const {
  switch (kind_) {
    case RegionKind::Empty: return false;
    case RegionKind::Point: return std::abs(z - vertices_[0]) <= tol;
    case RegionKind::Segment: return segment_distance(vertices_[0], vertices_[1], z) <= tol;
    case RegionKind::Polygon:
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const CPoint a = vertices_[i];
        const CPoint b = vertices_[(i + 1) % vertices_.size()];
        if (cross(a, b, z) / std::abs(b - a) < -tol) return false;
      }
      return true;
  }
  return false;
}

double ConvexRegion::area() const {
  if (kind_ != RegionKind::Polygon) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    twice += cross(CPoint{}, vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return 0.5 * twice;
}

double ConvexRegion::boundary_distance(CPoint z) const {
  switch (kind_) {
    case RegionKind::Empty: return std::numeric_limits<double>::infinity();
    case RegionKind::Point: return std::abs(z - vertices_[0]);
    case RegionKind::Segment: return segment_distance(vertices_[0], vertices_[1], z);
    case RegionKind::Polygon: {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        best = std::min(best, segment_distance(vertices_[i],
                                               vertices_[(i + 1) % vertices_.size()], z));
      }
      return best;
    }
  }
  return 0.0;
}

double ConvexRegion::support(double xi) const {
  if (kind_ == RegionKind::Empty) {
    throw Error(ErrorCode::InvalidInput, "support of an empty region");
  }
  const CPoint rot = std::polar(1.0, -xi);
  double best = -std::numeric_limits<double>::infinity();
  for (const CPoint& v : vertices_) best = std::max(best, std::real(rot * v));
  return best;
}

std::vector<HalfPlane> ConvexRegion::to_half_planes() const {
  std::vector<HalfPlane> out;
  switch (kind_) {
    case RegionKind::Empty:
      out.emplace_back(-1.0, 0.0);
      out.emplace_back(-1.0, kPi);
      break;
    case RegionKind::Point: {
      const CPoint p = vertices_[0];
      out.emplace_back(p.real(), 0.0);
      out.emplace_back(p.imag(), kPi / 2.0);
      out.emplace_back(-p.real(), kPi);
      out.emplace_back(-p.imag(), 1.5 * kPi);
      break;
    }
    case RegionKind::Segment: {
      const CPoint a = vertices_[0];
      const CPoint b = vertices_[1];
      out.push_back(half_plane_from_pair(a, b, Tolerance{0.0, 1e-12}));
      out.push_back(half_plane_from_pair(b, a, Tolerance{0.0, 1e-12}));
      const double cap_b = std::arg(b - a);
      const double cap_a = std::arg(a - b);
      out.emplace_back(std::real(std::polar(1.0, -cap_b) * b), cap_b);
      out.emplace_back(std::real(std::polar(1.0, -cap_a) * a), cap_a);
      break;
    }
    case RegionKind::Polygon:
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        out.push_back(half_plane_from_pair(vertices_[i], vertices_[(i + 1) % vertices_.size()],
                                           Tolerance{0.0, 1e-12}));
      }
      break;
  }
  return out;
}

ConvexRegion convex_hull(std::span<const CPoint> pts, const Tolerance& tol) {
  if (pts.empty()) throw Error(ErrorCode::InvalidInput, "convex hull of no points");
  std::vector<CPoint> sorted(pts.begin(), pts.end());
  for (const CPoint& p : sorted) require_finite(p);
  std::sort(sorted.begin(), sorted.end(), [](CPoint a, CPoint b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });

  // Andrew's monotone chain; near-collinear middle points are dropped.
  auto keeps_turning_left = [&](CPoint o, CPoint a, CPoint b) {
    return cross(o, a, b) > tol.abs * std::abs(b - o);
  };
  std::vector<CPoint> hull;
  for (const CPoint& p : sorted) {
    while (hull.size() >= 2 && !keeps_turning_left(hull[hull.size() - 2], hull.back(), p)) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) {
    while (hull.size() >= lower && !keeps_turning_left(hull[hull.size() - 2], hull.back(), *it)) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  if (hull.size() > 1) hull.pop_back();

  if (hull.size() < 3) {
    // All points within tolerance of a line: keep the extreme pair.
    const CPoint a = sorted.front();
    const CPoint b = sorted.back();
    if (std::abs(b - a) <= 10.0 * tol.abs) return classify({a}, tol.abs);
    return classify({a, b}, tol.abs);
  }
  return classify(std::move(hull), tol.abs);
}

ConvexRegion intersect_half_planes(std::span<const HalfPlane> hs, const Tolerance& tol,
                                   std::optional<ClipBox> clip_box) {
  if (hs.empty()) throw Error(ErrorCode::InvalidInput, "no half planes to intersect");

  std::vector<HalfPlane> planes;
  planes.reserve(hs.size());
  for (const HalfPlane& h : hs) {
    if (!std::isfinite(h.d) || !std::isfinite(h.xi)) {
      throw Error(ErrorCode::InvalidInput, "non-finite half plane");
    }
    HalfPlane c = h;
    c.xi = canonical_angle(h.xi, tol.angle);
    planes.push_back(c);
  }
  std::sort(planes.begin(), planes.end(),
            [](const HalfPlane& a, const HalfPlane& b) { return a.xi < b.xi; });

  // Same normal: only the tighter offset matters.
  std::vector<HalfPlane> unique;
  for (const HalfPlane& h : planes) {
    if (!unique.empty() && h.xi - unique.back().xi <= tol.angle) {
      if (h.d < unique.back().d) unique.back() = HalfPlane{h.d, unique.back().xi};
      continue;
    }
    unique.push_back(h);
  }
  if (unique.size() > 1 && unique.front().xi + kTwoPi - unique.back().xi <= tol.angle) {
    unique.front().d = std::min(unique.front().d, unique.back().d);
    unique.pop_back();
  }

  for (std::size_t i = 0; i < unique.size(); ++i) {
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      if (std::abs(ccw_angle(unique[i].xi, unique[j].xi) - kPi) <= tol.angle &&
          unique[i].d + unique[j].d < -tol.abs) {
        return ConvexRegion::empty();
      }
    }
  }

  double max_gap = 0.0;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const double next = (i + 1 < unique.size()) ? unique[i + 1].xi : unique.front().xi + kTwoPi;
    max_gap = std::max(max_gap, next - unique[i].xi);
  }
  if (unique.size() == 1) max_gap = kTwoPi;
  const bool bounded = max_gap < kPi - tol.angle;
  if (!bounded && !clip_box) {
    throw Error(ErrorCode::UnboundedRegion, "half planes do not bound a region");
  }

  std::vector<LabeledVertex> poly;
  double scale = 0.0;
  if (clip_box) {
    const CPoint lo = clip_box->lo;
    const CPoint hi = clip_box->hi;
    poly = {{lo, kBoxLabel}, {CPoint{hi.real(), lo.imag()}, kBoxLabel}, {hi, kBoxLabel},
            {CPoint{lo.real(), hi.imag()}, kBoxLabel}};
    scale = std::max(std::abs(lo), std::abs(hi));
  } else {
    double dmax = 0.0;
    for (const HalfPlane& h : unique) dmax = std::max(dmax, std::abs(h.d));
    const double r = 2.0 * (dmax + 1.0) / std::max(std::cos(max_gap / 2.0), 1e-12);
    poly = {{CPoint{-r, -r}, kBoxLabel}, {CPoint{r, -r}, kBoxLabel}, {CPoint{r, r}, kBoxLabel},
            {CPoint{-r, r}, kBoxLabel}};
    scale = r;
  }

  for (std::size_t i = 0; i < unique.size() && !poly.empty(); ++i) {
    poly = clip(poly, unique[i], static_cast<long>(i), tol.abs);
  }
  if (poly.empty()) return ConvexRegion::empty();

  // Snap each vertex onto the exact crossing of its two supporting lines;
  // the clipped coordinate carries rounding proportional to the box size.
  const double snap_limit = 1e-7 + 1e3 * std::numeric_limits<double>::epsilon() * scale;
  std::vector<CPoint> pts;
  pts.reserve(poly.size());
  bool touches_box = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const long in = poly[i].label;
    const long out = poly[(i + 1) % poly.size()].label;
    CPoint p = poly[i].p;
    if (in == kBoxLabel || out == kBoxLabel) touches_box = true;
    if (in >= 0 && out >= 0 && in != out) {
      if (auto x = boundary_intersection(unique[static_cast<std::size_t>(in)],
                                         unique[static_cast<std::size_t>(out)]);
          x && std::abs(*x - p) <= snap_limit) {
        p = *x;
      }
    }
    pts.push_back(p);
  }
  if (touches_box && !clip_box && poly.size() > 1) {
    throw Error(ErrorCode::UnboundedRegion, "intersection reaches the bounding box");
  }
  return convex_hull(pts, tol);
}

bool region_equal(const ConvexRegion& r1, const ConvexRegion& r2, double tol) {
  if (r1.kind() != r2.kind()) return false;
  const auto& a = r1.vertices();
  const auto& b = r2.vertices();
  if (a.size() != b.size()) return false;
  auto close = [tol](CPoint p, CPoint q) {
    return std::abs(p.real() - q.real()) <= tol && std::abs(p.imag() - q.imag()) <= tol;
  };
  switch (r1.kind()) {
    case RegionKind::Empty: return true;
    case RegionKind::Point: return close(a[0], b[0]);
    case RegionKind::Segment:
      return (close(a[0], b[0]) && close(a[1], b[1])) || (close(a[0], b[1]) && close(a[1], b[0]));
    case RegionKind::Polygon:
      for (std::size_t shift = 0; shift < b.size(); ++shift) {
        bool all = true;
        for (std::size_t i = 0; i < a.size() && all; ++i) {
          all = close(a[i], b[(i + shift) % b.size()]);
        }
        if (all) return true;
      }
      return false;
  }
  return false;
}

}  // namespace rankrange
