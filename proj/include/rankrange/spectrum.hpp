#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "rankrange/geometry.hpp"

namespace rankrange {

struct Eigenvalue {
  CPoint value;
  std::size_t multiplicity = 1;
};

/// Eigenvalue multiset of a normal matrix: distinct values (separated by more
/// than the tolerance) with positive multiplicities.
class NormalSpectrum {
 public:
  /// Merges values within `tol.abs` of each other; the merged representative
  /// is the multiplicity-weighted mean.
  static NormalSpectrum from_values(std::span<const CPoint> values, const Tolerance& tol = {});
  static NormalSpectrum from_entries(std::span<const Eigenvalue> entries,
                                     const Tolerance& tol = {});

  const std::vector<Eigenvalue>& entries() const { return entries_; }
  const Eigenvalue& operator[](std::size_t i) const { return entries_[i]; }
  CPoint value(std::size_t i) const { return entries_[i].value; }
  /// n: dimension of the matrix (total multiplicity).
  std::size_t dimension() const { return dimension_; }
  /// m: number of distinct eigenvalues.
  std::size_t distinct() const { return entries_.size(); }
  /// All n eigenvalues, each repeated by its multiplicity.
  std::vector<CPoint> expanded() const;
  std::vector<CPoint> distinct_values() const;

 private:
  std::vector<Eigenvalue> entries_;
  std::size_t dimension_ = 0;
};

struct ScalarSpectrum {
  CPoint value;
};

/// Eigenvalues on the line { base + t e^{i angle} }, angle in [0, π).
/// `offsets` holds t for all n eigenvalues, sorted descending.
struct CollinearSpectrum {
  double angle = 0.0;
  CPoint base;
  std::vector<double> offsets;

  CPoint at(double t) const { return base + t * std::polar(1.0, angle); }
};

struct GeneralSpectrum {};

using Collinearity = std::variant<ScalarSpectrum, CollinearSpectrum, GeneralSpectrum>;

Collinearity collinearity(const NormalSpectrum& sp, const Tolerance& tol = {});

/// Spectrum of mu*A + shift*I. Throws DegenerateScale if |mu| <= tol.
NormalSpectrum transform(const NormalSpectrum& sp, CPoint mu, CPoint shift,
                         const Tolerance& tol = {});

}  // namespace rankrange
