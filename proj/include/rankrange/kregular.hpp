#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rankrange {

/// Default tolerance for deciding that two directions coincide or are
/// antipodal.
inline constexpr double kDirectionTol = 1e-9;

/// Finite set of unit-circle directions, stored as sorted angles in [0, 2π).
class DirectionSet {
 public:
  DirectionSet() = default;
  /// Canonicalizes and sorts; throws InvalidInput on non-finite or repeated
  /// directions.
  explicit DirectionSet(std::span<const double> angles, double angle_tol = kDirectionTol);

  const std::vector<double>& angles() const { return angles_; }
  double operator[](std::size_t i) const { return angles_[i]; }
  std::size_t size() const { return angles_.size(); }
  /// Number of antipodal pairs.
  std::size_t antipodal_pairs() const { return antipodal_; }
  double angle_tol() const { return tol_; }

  bool contains(double xi) const;
  /// True when the antipode of member i is also a member.
  bool has_antipode(std::size_t i) const;

  /// Union with extra directions; throws InvalidInput on collisions.
  DirectionSet with(std::span<const double> extra) const;
  /// Members other than those at the given positions.
  DirectionSet without(std::span<const std::size_t> positions) const;

 private:
  std::vector<double> angles_;
  std::size_t antipodal_ = 0;
  double tol_ = kDirectionTol;
};

/// True iff every open half circle starting at a member contains at least k
/// members.
bool is_k_regular(const DirectionSet& ds, std::size_t k, double angle_tol = kDirectionTol);

std::size_t count_antipodal(const DirectionSet& ds);

/// Largest k for which the set is k-regular (0 for sets with fewer than 3
/// directions).
std::size_t regularity(const DirectionSet& ds);

/// Smallest possible size of a k-regular set: 2k+1, or 2k+2 if it contains
/// an antipodal pair.
std::size_t regular_lower_bound(std::size_t k, bool has_antipodal_pair);
/// The bound implied by the set's own regularity and antipodal pairs.
std::size_t regular_lower_bound(const DirectionSet& ds);

struct ExtensionResult {
  std::size_t q = 0;
  std::vector<double> added;
  /// Members whose removal leaves a (k-q)-regular set, when the count came
  /// from the deletion search.
  std::optional<std::vector<double>> witness_removed;
};

/// Fewest directions to add so the union is k-regular, with one such set of
/// directions. Throws NotOneRegular unless the input is 1-regular.
ExtensionResult minimal_extension(const DirectionSet& ds, std::size_t k);

/// Independent exhaustive count: tries every placement of q' new directions
/// at the first q' of `grid` equal steps inside each cell cut out by the
/// members and their antipodes (plus the antipodes themselves), for
/// q' = 0, 1, .... Throws TooLarge when the search space is out of reach.
std::size_t exhaustive_min_extension(const DirectionSet& ds, std::size_t k,
                                     std::size_t grid = 64);

}  // namespace rankrange
