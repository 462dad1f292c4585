#include "rankrange/rank_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "rankrange/errors.hpp"

namespace rankrange {

std::vector<HalfPlane> CandidateSet::planes() const {
  std::vector<HalfPlane> out;
  out.reserve(pairs.size());
  for (const CandidatePair& p : pairs) out.push_back(p.plane);
  return out;
}

bool CandidateSet::has(std::size_t r, std::size_t s) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const CandidatePair& p) { return p.r == r && p.s == s; });
}

SideCounts count_sides(const NormalSpectrum& sp, CPoint a, CPoint b, const Tolerance& tol) {
  const CPoint dir = b - a;
  const double len = std::abs(dir);
  SideCounts counts;
  for (const Eigenvalue& e : sp.entries()) {
    const double dist = std::imag(std::conj(dir) * (e.value - a)) / len;
    if (dist > tol.abs) {
      counts.left += e.multiplicity;
    } else if (dist < -tol.abs) {
      counts.right += e.multiplicity;
    } else {
      counts.on_line += e.multiplicity;
    }
  }
  return counts;
}

namespace {

void require_rank(std::size_t k, std::size_t lo, std::size_t hi) {
  if (k < lo || k > hi) {
    throw Error(ErrorCode::BadRank, "rank k=" + std::to_string(k) + " outside [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

CandidatePair make_pair(const NormalSpectrum& sp, std::size_t r, std::size_t s,
                        const Tolerance& tol) {
  CandidatePair p{r, s, half_plane_from_pair(sp.value(r), sp.value(s), tol)};
  p.plane.source = std::make_pair(r, s);
  return p;
}

ConvexRegion intersect_pairs(const std::vector<CandidatePair>& pairs, const Tolerance& tol) {
  std::vector<HalfPlane> planes;
  planes.reserve(pairs.size());
  for (const CandidatePair& p : pairs) planes.push_back(p.plane);
  return intersect_half_planes(planes, tol);
}

}  // namespace

CandidateSet build_closed_pairs(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol) {
  const std::size_t n = sp.dimension();
  require_rank(k, 1, n);
  CandidateSet out;
  out.tag = CandidateTag::All;
  for (std::size_t r = 0; r < sp.distinct(); ++r) {
    for (std::size_t s = 0; s < sp.distinct(); ++s) {
      if (r == s) continue;
      const SideCounts c = count_sides(sp, sp.value(r), sp.value(s), tol);
      if (c.right + 1 <= k) out.pairs.push_back(make_pair(sp, r, s, tol));
    }
  }
  return out;
}

CandidateSet build_s0(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol) {
  const std::size_t n = sp.dimension();
  if (n < 2) throw Error(ErrorCode::BadRank, "rank k must satisfy 1 <= k < n");
  require_rank(k, 1, n - 1);
  const auto few = static_cast<long>(n - k) - 1;  // at most n-k-1 strictly inside
  const auto spill = static_cast<long>(k) - 1;    // at most k-1 strictly outside

  CandidateSet out;
  out.tag = CandidateTag::Reduced;
  for (std::size_t r = 0; r < sp.distinct(); ++r) {
    for (std::size_t s = r + 1; s < sp.distinct(); ++s) {
      const SideCounts c = count_sides(sp, sp.value(r), sp.value(s), tol);
      const auto left = static_cast<long>(c.left);
      const auto right = static_cast<long>(c.right);
      if (left <= few && right <= spill) out.pairs.push_back(make_pair(sp, r, s, tol));
      if (right <= few && left <= spill) out.pairs.push_back(make_pair(sp, s, r, tol));
    }
  }
  return out;
}

ConvexRegion line_confined_range(const NormalSpectrum& sp, std::size_t k, std::size_t p,
                                 std::size_t q, const CandidateSet& s0, const Tolerance& tol) {
  const CPoint ap = sp.value(p);
  const CPoint span = sp.value(q) - ap;
  const double scale = std::abs(span);
  const double ntol = tol.abs / scale;
  auto normalized = [&](std::size_t j) { return (sp.value(j) - ap) / span; };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  double lower = -kInf;
  double upper = kInf;
  bool crossing = false;
  for (const CandidatePair& pair : s0.pairs) {
    const CPoint hr = normalized(pair.r);
    const CPoint hs = normalized(pair.s);
    if (std::abs(hr.imag() - hs.imag()) <= ntol) continue;
    crossing = true;
    const double b = (hr.imag() * hs.real() - hs.imag() * hr.real()) / (hr.imag() - hs.imag());
    if (hr.imag() >= -ntol && hs.imag() <= ntol) lower = std::max(lower, b);
    if (hr.imag() <= ntol && hs.imag() >= -ntol) upper = std::min(upper, b);
  }
  if (!crossing) {
    // Nothing crosses the line: only a spectrum lying on it has a range there.
    if (std::holds_alternative<GeneralSpectrum>(collinearity(sp, tol))) return ConvexRegion::empty();
    return lambda_k(sp, k, tol);
  }
  if (!std::isfinite(lower) || !std::isfinite(upper)) return intersect_pairs(s0.pairs, tol);
  if ((lower - upper) * scale > tol.abs) return ConvexRegion::empty();
  if (lower > upper) lower = upper = 0.5 * (lower + upper);
  const CPoint ends[] = {ap + span * lower, ap + span * upper};
  return convex_hull(ends, tol);
}

ConvexRegion pivot_reduced_range(const NormalSpectrum& sp, std::size_t k, const CandidateSet& s0,
                                 const Tolerance& tol) {
  (void)k;
  std::vector<CandidatePair> pairs = s0.pairs;
  const std::size_t max_rounds = pairs.size() + 1;

  for (std::size_t round = 0; round < max_rounds; ++round) {
    // A pivot is an eigenvalue index shared by at least three candidate pairs.
    std::map<std::size_t, std::vector<std::size_t>> by_index;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      by_index[pairs[i].r].push_back(i);
      by_index[pairs[i].s].push_back(i);
    }
    auto pivot = std::find_if(by_index.begin(), by_index.end(),
                              [](const auto& kv) { return kv.second.size() >= 3; });
    if (pivot == by_index.end()) break;

    const std::size_t t = pivot->first;
    const CPoint at = sp.value(t);
    struct Ray {
      double theta;
      std::size_t pair;
    };
    std::vector<Ray> rays;
    for (std::size_t i : pivot->second) {
      const CandidatePair& cp = pairs[i];
      const CPoint dir = (cp.r == t) ? sp.value(cp.s) - at : at - sp.value(cp.r);
      rays.push_back({canonical_angle(std::arg(dir), tol.angle), i});
    }
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.theta < b.theta; });

    // Largest cyclic gap between consecutive directions through a_t.
    std::size_t gap_at = 0;
    double gap = -1.0;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      const double next = (j + 1 < rays.size()) ? rays[j + 1].theta : rays.front().theta + kTwoPi;
      if (next - rays[j].theta > gap) {
        gap = next - rays[j].theta;
        gap_at = j;
      }
    }

    if (gap > kPi + tol.angle) {
      // All directions fit in an arc shorter than π: only its two ends bind.
      const std::size_t keep_a = rays[gap_at].pair;
      const std::size_t keep_b = rays[(gap_at + 1) % rays.size()].pair;
      std::vector<CandidatePair> kept;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const bool in_group = std::any_of(rays.begin(), rays.end(),
                                          [&](const Ray& ray) { return ray.pair == i; });
        if (!in_group || i == keep_a || i == keep_b) kept.push_back(pairs[i]);
      }
      pairs = std::move(kept);
      continue;
    }
    if (gap < kPi - tol.angle) {
      // The pivot's half planes pin the range to {a_t} at most.
      const bool inside = std::all_of(pairs.begin(), pairs.end(), [&](const CandidatePair& cp) {
        return cp.plane.contains(at, tol.abs);
      });
      return inside ? ConvexRegion::point(at) : ConvexRegion::empty();
    }
    // A gap of exactly π leaves a ray through a_t; the plain intersection decides.
    break;
  }
  return intersect_pairs(pairs, tol);
}

ConvexRegion lambda_k(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol) {
  const std::size_t n = sp.dimension();
  require_rank(k, 1, n);

  const Collinearity shape = collinearity(sp, tol);
  if (const auto* scalar = std::get_if<ScalarSpectrum>(&shape)) {
    return ConvexRegion::point(scalar->value);
  }
  if (k == n) return ConvexRegion::empty();

  if (const auto* line = std::get_if<CollinearSpectrum>(&shape)) {
    const double hi = line->offsets[k - 1];
    const double lo = line->offsets[n - k];
    if (hi < lo - tol.abs) return ConvexRegion::empty();
    const CPoint ends[] = {line->at(lo), line->at(std::max(hi, lo))};
    return convex_hull(ends, tol);
  }

  const CandidateSet s0 = build_s0(sp, k, tol);
  for (const CandidatePair& cp : s0.pairs) {
    if (s0.has(cp.s, cp.r)) return line_confined_range(sp, k, cp.r, cp.s, s0, tol);
  }
  return pivot_reduced_range(sp, k, s0, tol);
}

CandidateSet minimal_half_planes(const NormalSpectrum& sp, std::size_t k, const Tolerance& tol) {
  const ConvexRegion target = lambda_k(sp, k, tol);
  if (target.kind() != RegionKind::Polygon) {
    throw Error(ErrorCode::NotPolygon, std::string("rank-k range is ") + to_string(target.kind()));
  }
  const CandidateSet s0 = build_s0(sp, k, tol);

  // Pairs whose line carries no edge of the range go first: they are always
  // removable, and dropping them never makes another pair necessary.
  const auto& verts = target.vertices();
  auto edge_support = [&](const CandidatePair& cp) {
    std::size_t touching = 0;
    for (const CPoint& v : verts) touching += cp.plane.on_boundary(v, 10.0 * tol.abs) ? 1 : 0;
    return touching;
  };
  std::vector<std::size_t> order(s0.pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edge_support(s0.pairs[a]) < edge_support(s0.pairs[b]);
  });

  std::vector<bool> kept(s0.pairs.size(), true);
  const double match_tol = 1e-7;
  for (std::size_t idx : order) {
    kept[idx] = false;
    std::vector<HalfPlane> trial;
    for (std::size_t i = 0; i < s0.pairs.size(); ++i) {
      if (kept[i]) trial.push_back(s0.pairs[i].plane);
    }
    bool same = false;
    if (!trial.empty()) {
      try {
        same = region_equal(intersect_half_planes(trial, tol), target, match_tol);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::UnboundedRegion) throw;
      }
    }
    if (!same) kept[idx] = true;
  }

  CandidateSet out;
  out.tag = CandidateTag::Minimal;
  for (std::size_t i = 0; i < s0.pairs.size(); ++i) {
    if (kept[i]) out.pairs.push_back(s0.pairs[i]);
  }
  return out;
}

}  // namespace rankrange
