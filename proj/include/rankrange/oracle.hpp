#pragma once

#include <cstddef>
#include <vector>

#include "rankrange/geometry.hpp"
#include "rankrange/spectrum.hpp"

/// Reference computations of the rank-k range that do not go through the
/// eigenvalue-pair candidate construction.
namespace rankrange::oracle {

/// Largest dimension accepted by `hull_intersection`.
inline constexpr std::size_t kMaxHullDimension = 14;

/// Intersection of the convex hulls of every (n-k+1)-element sub-multiset of
/// the eigenvalues. Throws TooLarge if n > 14.
ConvexRegion hull_intersection(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol = {});

/// Samples of xi -> k-th largest of Re(e^{-i xi} a_j) (with multiplicity).
struct SweepProfile {
  std::vector<double> angles;
  std::vector<double> offsets;
};

/// k-th largest projection of the eigenvalues onto direction xi.
double kth_projection(const NormalSpectrum& sp, std::size_t k, double xi);

/// Uniform grid of `num_angles` directions, merged with every direction where
/// two eigenvalue projections swap order. Throws InvalidInput if
/// num_angles < 8.
SweepProfile angle_sweep(const NormalSpectrum& sp, std::size_t k, std::size_t num_angles,
                         bool include_critical = true, const Tolerance& tol = {});

/// Intersection of the sampled support half planes: an outer approximation
/// of the range, exact when the critical directions are sampled.
ConvexRegion sweep_region(const SweepProfile& profile, const Tolerance& tol = {});

}  // namespace rankrange::oracle
