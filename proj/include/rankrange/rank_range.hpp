#pragma once

#include <cstddef>
#include <vector>

#include "rankrange/geometry.hpp"
#include "rankrange/spectrum.hpp"

namespace rankrange {

/// H(a_r, a_s) for an ordered pair of distinct-eigenvalue indices.
struct CandidatePair {
  std::size_t r = 0;
  std::size_t s = 0;
  HalfPlane plane;
};

enum class CandidateTag { All, Reduced, Minimal };

/// Index pairs whose left closed half plane holds at least n-k+1 eigenvalues
/// (All); of those, the ones whose open side holds at most n-k-1
/// (Reduced); or an irreducible subset of the latter (Minimal).
struct CandidateSet {
  std::vector<CandidatePair> pairs;
  CandidateTag tag = CandidateTag::Reduced;

  std::vector<HalfPlane> planes() const;
  bool has(std::size_t r, std::size_t s) const;
};

/// Eigenvalue counts (with multiplicity) strictly left of, strictly right of,
/// and on the directed line through a then b.
struct SideCounts {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t on_line = 0;
};

SideCounts count_sides(const NormalSpectrum& sp, CPoint a, CPoint b, const Tolerance& tol = {});

/// Pairs (r, s) such that H(a_r, a_s) holds >= n-k+1 eigenvalues, without the
/// open-side restriction. Used for containment checks.
CandidateSet build_closed_pairs(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol = {});

/// The reduced candidate family: every ordered pair (r, s) whose closed left
/// half plane holds >= n-k+1 eigenvalues and whose open left half plane holds
/// <= n-k-1. Throws BadRank unless 1 <= k < n.
CandidateSet build_s0(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol = {});

/// Rank-k numerical range of the normal matrix with spectrum `sp`.
/// Throws BadRank unless 1 <= k <= n.
ConvexRegion lambda_k(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol = {});

/// Range when both (p, q) and (q, p) are candidates: the result lies on the
/// line through a_p and a_q and is found from where the other candidate lines
/// cross it.
ConvexRegion line_confined_range(const NormalSpectrum& sp, std::size_t k, std::size_t p,
                                 std::size_t q, const CandidateSet& s0,
                                 const Tolerance& tol = {});

/// Range with redundant pairs around shared pivot eigenvalues removed first;
/// may conclude directly that the range is {a_t} or empty.
ConvexRegion pivot_reduced_range(const NormalSpectrum& sp, std::size_t k, const CandidateSet& s0,
                                 const Tolerance& tol = {});

/// A smallest-by-deletion subset of the candidate family that still cuts out
/// the range. Throws NotPolygon unless the range is a non-degenerate polygon.
CandidateSet minimal_half_planes(const NormalSpectrum& sp, std::size_t k,
                                 const Tolerance& tol = {});

}  // namespace rankrange
