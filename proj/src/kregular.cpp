#include "rankrange/kregular.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "rankrange/errors.hpp"
#include "rankrange/geometry.hpp"

namespace rankrange {

namespace {

bool same_direction(double a, double b, double tol) {
  const double off = ccw_angle(a, b);
  return off <= tol || off >= kTwoPi - tol;
}

bool in_open_half(double from, double to, double tol) {
  const double off = ccw_angle(from, to);
  return off > tol && off < kPi - tol;
}

double antipode(double xi) { return canonical_angle(xi + kPi); }

bool contains_direction(std::span<const double> set, double xi, double tol) {
  return std::any_of(set.begin(), set.end(),
                     [&](double a) { return same_direction(a, xi, tol); });
}

std::size_t half_count(std::span<const double> set, double from, double tol) {
  return static_cast<std::size_t>(std::count_if(
      set.begin(), set.end(), [&](double a) { return in_open_half(from, a, tol); }));
}

bool regular(std::span<const double> set, std::size_t k, double tol) {
  if (k == 0) return true;
  if (set.empty()) return false;
  return std::all_of(set.begin(), set.end(),
                     [&](double a) { return half_count(set, a, tol) >= k; });
}

// Calls fn on every t-subset of {0..n-1} in lexicographic order until fn
// returns true. Returns whether it did.
bool for_each_subset(std::size_t n, std::size_t t,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (t > n) return false;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t pos = t;
    while (pos > 0 && idx[pos - 1] == n - t + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < t; ++i) idx[i] = idx[i - 1] + 1;
  }
}

// Sorted distinct directions, merging within tol (including across 0).
std::vector<double> sorted_unique(std::vector<double> xs, double tol) {
  for (double& x : xs) x = canonical_angle(x);
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  if (out.size() > 1 && same_direction(out.back(), out.front(), tol)) out.pop_back();
  return out;
}

// Gap from each arrangement point to the next one counter-clockwise.
std::vector<double> cyclic_gaps(const std::vector<double>& sorted) {
  std::vector<double> gaps(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    gaps[i] = sorted.size() == 1 ? kTwoPi : ccw_angle(sorted[i], sorted[(i + 1) % sorted.size()]);
  }
  return gaps;
}

std::vector<double> with_antipodes(std::span<const double> set) {
  std::vector<double> out(set.begin(), set.end());
  for (double a : set) out.push_back(antipode(a));
  return out;
}

std::vector<double> extend_few_members(const DirectionSet& ds, std::size_t k) {
  const double tol = ds.angle_tol();
  const std::size_t p = ds.size();
  const std::size_t s = ds.antipodal_pairs();

  std::vector<double> added;
  for (std::size_t i = 0; i < p; ++i) {
    if (!ds.has_antipode(i)) added.push_back(antipode(ds[i]));
  }

  // Filler pairs go inside the widest cell of the members and their
  // antipodes that starts in [0, π), so the partner lands in the opposite
  // cell.
  const std::size_t pairs = k + s + 1 - p;
  const std::vector<double> arrangement = sorted_unique(with_antipodes(ds.angles()), tol);
  const std::vector<double> gaps = cyclic_gaps(arrangement);
  std::size_t widest = 0;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    if (arrangement[i] < kPi - tol && gaps[i] > gaps[widest]) widest = i;
  }
  for (std::size_t j = 1; j <= pairs; ++j) {
    const double xi = canonical_angle(arrangement[widest] + gaps[widest] * static_cast<double>(j) /
                                                               static_cast<double>(pairs + 1));
    added.push_back(xi);
    added.push_back(antipode(xi));
  }
  if (s > 0) return added;

  // Without antipodal pairs one reflection is redundant: drop the antipode
  // of the first member and tilt the rest away from it.
  const double anchor = ds[0];
  std::vector<double> all = added;
  all.insert(all.end(), ds.angles().begin(), ds.angles().end());
  const std::vector<double> ring = sorted_unique(all, tol);
  double min_gap = kTwoPi;
  for (double g : cyclic_gaps(ring)) min_gap = std::min(min_gap, g);
  const double delta = min_gap / 8.0;

  std::vector<double> tilted;
  for (double xi : added) {
    const double off = ccw_angle(anchor, xi);
    if (std::abs(off - kPi) <= tol) continue;
    tilted.push_back(canonical_angle(off < kPi ? xi + delta : xi - delta));
  }
  return tilted;
}

bool valid_new_direction(double beta, std::span<const double> current,
                         std::span<const double> forbidden, double tol) {
  if (contains_direction(current, beta, tol)) return false;
  for (double f : forbidden) {
    if (same_direction(f, beta, tol) || same_direction(antipode(f), beta, tol)) return false;
  }
  return true;
}

// Given `current` (which holds gamma) such that removing gamma leaves a
// (k-1)-regular set, returns beta making current + beta k-regular.
double restore_direction(const std::vector<double>& current, double gamma, std::size_t k,
                         std::span<const double> forbidden, double tol) {
  auto accept = [&](double beta) {
    if (!valid_new_direction(beta, current, forbidden, tol)) return false;
    std::vector<double> trial = current;
    trial.push_back(beta);
    return regular(trial, k, tol);
  };

  std::vector<double> rel;
  for (double a : current) {
    if (!same_direction(a, gamma, tol)) rel.push_back(ccw_angle(gamma, a));
  }
  std::sort(rel.begin(), rel.end());
  const std::size_t m = static_cast<std::size_t>(
      std::count_if(rel.begin(), rel.end(), [&](double a) { return a > tol && a < kPi - tol; }));

  std::optional<double> theta;
  if (m + 1 == k && m >= 1) {
    theta = std::max(kPi + rel[m - 1], rel.back()) / 2.0;
  } else if (m >= k && m < rel.size()) {
    theta = std::min(kTwoPi + rel.front(), kPi + rel[m]) / 2.0;
  }
  if (theta) {
    const double beta = canonical_angle(gamma + *theta);
    if (accept(beta)) return beta;
  }

  std::vector<double> marks = with_antipodes(current);
  const std::vector<double> extra = with_antipodes(forbidden);
  marks.insert(marks.end(), extra.begin(), extra.end());
  const std::vector<double> ring = sorted_unique(marks, tol);
  const std::vector<double> gaps = cyclic_gaps(ring);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double beta = canonical_angle(ring[i] + gaps[i] / 2.0);
    if (accept(beta)) return beta;
  }
  for (double a : current) {
    if (accept(antipode(a))) return antipode(a);
  }
  throw Error(ErrorCode::VerificationFailed, "no direction restores regularity");
}

}  // namespace

DirectionSet::DirectionSet(std::span<const double> angles, double angle_tol) : tol_(angle_tol) {
  for (double a : angles) {
    if (!std::isfinite(a)) throw Error(ErrorCode::InvalidInput, "non-finite direction");
    angles_.push_back(canonical_angle(a, angle_tol));
  }
  std::sort(angles_.begin(), angles_.end());
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    const std::size_t j = (i + 1) % angles_.size();
    if (j != i && same_direction(angles_[i], angles_[j], tol_)) {
      throw Error(ErrorCode::InvalidInput, "repeated direction " + std::to_string(angles_[i]));
    }
  }
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (has_antipode(i)) ++antipodal_;
  }
  antipodal_ /= 2;
}

bool DirectionSet::contains(double xi) const { return contains_direction(angles_, xi, tol_); }

bool DirectionSet::has_antipode(std::size_t i) const { return contains(antipode(angles_[i])); }

DirectionSet DirectionSet::with(std::span<const double> extra) const {
  std::vector<double> all = angles_;
  all.insert(all.end(), extra.begin(), extra.end());
  return DirectionSet(all, tol_);
}

DirectionSet DirectionSet::without(std::span<const std::size_t> positions) const {
  std::vector<double> kept;
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) {
      kept.push_back(angles_[i]);
    }
  }
  return DirectionSet(kept, tol_);
}

bool is_k_regular(const DirectionSet& ds, std::size_t k, double angle_tol) {
  return regular(ds.angles(), k, angle_tol);
}

std::size_t count_antipodal(const DirectionSet& ds) { return ds.antipodal_pairs(); }

std::size_t regularity(const DirectionSet& ds) {
  if (ds.size() == 0) return 0;
  std::size_t k = std::numeric_limits<std::size_t>::max();
  for (double a : ds.angles()) k = std::min(k, half_count(ds.angles(), a, ds.angle_tol()));
  return k;
}

std::size_t regular_lower_bound(std::size_t k, bool has_antipodal_pair) {
  return 2 * k + (has_antipodal_pair ? 2 : 1);
}

std::size_t regular_lower_bound(const DirectionSet& ds) {
  return regular_lower_bound(regularity(ds), ds.antipodal_pairs() > 0);
}

ExtensionResult minimal_extension(const DirectionSet& ds, std::size_t k) {
  const double tol = ds.angle_tol();
  if (!is_k_regular(ds, 1, tol)) {
    throw Error(ErrorCode::NotOneRegular, "direction set is not 1-regular");
  }
  ExtensionResult result;
  if (is_k_regular(ds, k, tol)) return result;

  const std::size_t p = ds.size();
  const std::size_t s = ds.antipodal_pairs();

  if (k + s >= p) {
    result.added = extend_few_members(ds, k);
  } else {
    std::vector<std::size_t> lonely;
    for (std::size_t i = 0; i < p; ++i) {
      if (!ds.has_antipode(i)) lonely.push_back(i);
    }
    std::vector<std::size_t> removed;
    for (std::size_t t = 1; t <= std::min(k, lonely.size()) && removed.empty(); ++t) {
      if (p - t < regular_lower_bound(k - t, false)) continue;
      for_each_subset(lonely.size(), t, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> positions;
        for (std::size_t i : pick) positions.push_back(lonely[i]);
        if (!is_k_regular(ds.without(positions), k - t, tol)) return false;
        removed = positions;
        return true;
      });
    }
    if (removed.empty()) {
      throw Error(ErrorCode::VerificationFailed, "no deletion witness found");
    }

    std::vector<double> gammas;
    for (std::size_t i : removed) gammas.push_back(ds[i]);
    result.witness_removed = gammas;

    std::vector<double> current = ds.without(removed).angles();
    const std::size_t t = gammas.size();
    for (std::size_t j = 0; j < t; ++j) {
      current.push_back(gammas[j]);
      const std::span<const double> later(gammas.data() + j + 1, t - j - 1);
      const double beta = restore_direction(current, gammas[j], k - t + j + 1, later, tol);
      current.push_back(beta);
      result.added.push_back(beta);
    }
  }

  std::sort(result.added.begin(), result.added.end());
  result.q = result.added.size();
  if (!is_k_regular(ds.with(result.added), k, tol)) {
    throw Error(ErrorCode::VerificationFailed, "extension is not k-regular");
  }
  return result;
}

std::size_t exhaustive_min_extension(const DirectionSet& ds, std::size_t k, std::size_t grid) {
  const double tol = ds.angle_tol();
  if (is_k_regular(ds, k, tol)) return 0;
  if (ds.size() == 0) throw Error(ErrorCode::InvalidInput, "empty direction set");

  const std::vector<double> arrangement = sorted_unique(with_antipodes(ds.angles()), tol);
  const std::vector<double> gaps = cyclic_gaps(arrangement);
  const std::vector<double>& members = ds.angles();

  std::vector<std::size_t> deficit(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t have = half_count(members, members[i], tol);
    deficit[i] = have >= k ? 0 : k - have;
  }

  for (std::size_t count = 1; count <= 2 * k + 2; ++count) {
    if (count >= grid) throw Error(ErrorCode::TooLarge, "grid too coarse for this search");

    std::vector<double> candidates;
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
      for (std::size_t level = 1; level <= count; ++level) {
        candidates.push_back(canonical_angle(arrangement[i] + gaps[i] * static_cast<double>(level) /
                                                                  static_cast<double>(grid)));
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!ds.has_antipode(i)) candidates.push_back(antipode(members[i]));
    }

    double space = 1.0;
    for (std::size_t i = 0; i < count; ++i) {
      space *= static_cast<double>(candidates.size() - i) / static_cast<double>(i + 1);
    }
    if (space > 1e11) throw Error(ErrorCode::TooLarge, "extension search space too large");

    std::vector<std::vector<bool>> covers(candidates.size(), std::vector<bool>(members.size()));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        covers[c][i] = in_open_half(members[i], candidates[c], tol);
      }
    }

    std::vector<double> chosen;
    std::vector<std::size_t> covered(members.size(), 0);
    std::function<bool(std::size_t)> search = [&](std::size_t first) -> bool {
      const std::size_t left = count - chosen.size();
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (deficit[i] > covered[i] + left) return false;
      }
      if (left == 0) {
        std::vector<double> all = members;
        all.insert(all.end(), chosen.begin(), chosen.end());
        return regular(all, k, tol);
      }
      for (std::size_t c = first; c + left <= candidates.size(); ++c) {
        chosen.push_back(candidates[c]);
        for (std::size_t i = 0; i < members.size(); ++i) covered[i] += covers[c][i];
        const bool found = search(c + 1);
        for (std::size_t i = 0; i < members.size(); ++i) covered[i] -= covers[c][i];
        chosen.pop_back();
        if (found) return true;
      }
      return false;
    };
    if (search(0)) return count;
  }
  throw Error(ErrorCode::VerificationFailed, "no extension found within 2k+2 directions");
}

}  // namespace rankrange
