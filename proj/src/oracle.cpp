#include "rankrange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "rankrange/errors.hpp"

namespace rankrange::oracle {

ConvexRegion hull_intersection(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol) {
  const std::size_t n = sp.dimension();
  if (n > kMaxHullDimension) {
    throw Error(ErrorCode::TooLarge, "hull oracle limited to n <= " +
                                         std::to_string(kMaxHullDimension));
  }
  if (k < 1 || k > n) throw Error(ErrorCode::BadRank, "rank k outside [1, n]");

  const std::vector<CPoint> values = sp.expanded();
  const std::size_t size = n - k + 1;
  std::vector<HalfPlane> planes;
  std::vector<CPoint> subset(size);

  // Lexicographic enumeration of index combinations.
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = values[idx[i]];
    const ConvexRegion hull = convex_hull(subset, tol);
    const auto hp = hull.to_half_planes();
    planes.insert(planes.end(), hp.begin(), hp.end());

    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return intersect_half_planes(planes, tol);
}

double kth_projection(const NormalSpectrum& sp, std::size_t k, double xi) {
  if (k < 1 || k > sp.dimension()) throw Error(ErrorCode::BadRank, "rank k outside [1, n]");
  const CPoint rot = std::polar(1.0, -xi);
  std::vector<double> proj;
  proj.reserve(sp.dimension());
  for (const Eigenvalue& e : sp.entries()) {
    proj.insert(proj.end(), e.multiplicity, std::real(rot * e.value));
  }
  std::sort(proj.begin(), proj.end(), std::greater<>());
  return proj[k - 1];
}

SweepProfile angle_sweep(const NormalSpectrum& sp, std::size_t k, std::size_t num_angles,
                         bool include_critical, const Tolerance& tol) {
  if (num_angles < 8) throw Error(ErrorCode::InvalidInput, "angle sweep needs >= 8 angles");
  if (k < 1 || k > sp.dimension()) throw Error(ErrorCode::BadRank, "rank k outside [1, n]");

  std::vector<double> angles;
  for (std::size_t i = 0; i < num_angles; ++i) {
    angles.push_back(kTwoPi * static_cast<double>(i) / static_cast<double>(num_angles));
  }
  if (include_critical) {
    for (std::size_t i = 0; i < sp.distinct(); ++i) {
      for (std::size_t j = 0; j < sp.distinct(); ++j) {
        if (i == j) continue;
        const double dir = std::arg(sp.value(j) - sp.value(i));
        angles.push_back(canonical_angle(dir + kPi / 2.0, tol.angle));
        angles.push_back(canonical_angle(dir - kPi / 2.0, tol.angle));
      }
    }
  }
  for (double& a : angles) a = canonical_angle(a, tol.angle);
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [&](double a, double b) { return b - a <= tol.angle; }),
               angles.end());

  SweepProfile profile;
  profile.angles = angles;
  profile.offsets.reserve(angles.size());
  for (double xi : angles) profile.offsets.push_back(kth_projection(sp, k, xi));
  return profile;
}

ConvexRegion sweep_region(const SweepProfile& profile, const Tolerance& tol) {
  if (profile.angles.size() != profile.offsets.size() || profile.angles.empty()) {
    throw Error(ErrorCode::InvalidInput, "malformed sweep profile");
  }
  std::vector<HalfPlane> planes;
  planes.reserve(profile.angles.size());
  for (std::size_t i = 0; i < profile.angles.size(); ++i) {
    planes.emplace_back(profile.offsets[i], profile.angles[i]);
  }
  return intersect_half_planes(planes, tol);
}

}  // namespace rankrange::oracle
