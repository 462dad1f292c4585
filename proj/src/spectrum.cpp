#include "rankrange/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "rankrange/errors.hpp"

namespace rankrange {

NormalSpectrum NormalSpectrum::from_values(std::span<const CPoint> values, const Tolerance& tol) {
  std::vector<Eigenvalue> entries;
  entries.reserve(values.size());
  for (const CPoint& v : values) entries.push_back({v, 1});
  return from_entries(entries, tol);
}

NormalSpectrum NormalSpectrum::from_entries(std::span<const Eigenvalue> entries,
                                            const Tolerance& tol) {
  if (entries.empty()) throw Error(ErrorCode::InvalidInput, "spectrum needs at least one value");
  for (const Eigenvalue& e : entries) {
    require_finite(e.value);
    if (e.multiplicity == 0) throw Error(ErrorCode::InvalidInput, "multiplicity must be positive");
  }

  // Single-linkage clusters of values closer than the tolerance; the result
  // does not depend on input order.
  const std::size_t count = entries.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (std::abs(entries[i].value - entries[j].value) <= tol.abs) parent[find(i)] = find(j);
    }
  }

  std::vector<std::size_t> root_slot(count, count);
  std::vector<CPoint> weighted;
  NormalSpectrum sp;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = find(i);
    if (root_slot[r] == count) {
      root_slot[r] = sp.entries_.size();
      sp.entries_.push_back({CPoint{}, 0});
      weighted.emplace_back();
    }
    const std::size_t slot = root_slot[r];
    sp.entries_[slot].multiplicity += entries[i].multiplicity;
    weighted[slot] += static_cast<double>(entries[i].multiplicity) * entries[i].value;
  }
  for (std::size_t s = 0; s < sp.entries_.size(); ++s) {
    sp.entries_[s].value = weighted[s] / static_cast<double>(sp.entries_[s].multiplicity);
    sp.dimension_ += sp.entries_[s].multiplicity;
  }
  // Canonical order keeps results independent of input permutation.
  std::sort(sp.entries_.begin(), sp.entries_.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    return a.value.real() < b.value.real() ||
           (a.value.real() == b.value.real() && a.value.imag() < b.value.imag());
  });
  return sp;
}

std::vector<CPoint> NormalSpectrum::expanded() const {
  std::vector<CPoint> out;
  out.reserve(dimension_);
  for (const Eigenvalue& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::vector<CPoint> NormalSpectrum::distinct_values() const {
  std::vector<CPoint> out;
  out.reserve(entries_.size());
  for (const Eigenvalue& e : entries_) out.push_back(e.value);
  return out;
}

Collinearity collinearity(const NormalSpectrum& sp, const Tolerance& tol) {
  if (sp.distinct() == 1) return ScalarSpectrum{sp.value(0)};

  // Principal axis of the distinct values.
  const auto values = sp.distinct_values();
  CPoint centroid{};
  for (const CPoint& v : values) centroid += v;
  centroid /= static_cast<double>(values.size());
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  double spread = 0.0;
  for (const CPoint& v : values) {
    const CPoint c = v - centroid;
    sxx += c.real() * c.real();
    syy += c.imag() * c.imag();
    sxy += c.real() * c.imag();
    spread = std::max(spread, std::abs(c));
  }
  double angle = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  if (angle < 0.0) angle += kPi;
  if (angle >= kPi) angle -= kPi;
  const CPoint dir = std::polar(1.0, angle);

  double residual = 0.0;
  for (const CPoint& v : values) {
    residual = std::max(residual, std::abs(std::imag(std::conj(dir) * (v - centroid))));
  }
  if (residual > tol.abs * std::max(1.0, spread)) return GeneralSpectrum{};

  CollinearSpectrum line;
  line.angle = angle;
  line.base = centroid - std::real(std::conj(dir) * centroid) * dir;
  for (const Eigenvalue& e : sp.entries()) {
    line.offsets.insert(line.offsets.end(), e.multiplicity,
                        std::real(std::conj(dir) * (e.value - line.base)));
  }
  std::sort(line.offsets.begin(), line.offsets.end(), std::greater<>());
  return line;
}

NormalSpectrum transform(const NormalSpectrum& sp, CPoint mu, CPoint shift, const Tolerance& tol) {
  require_finite(mu);
  require_finite(shift);
  if (std::abs(mu) <= tol.abs) throw Error(ErrorCode::DegenerateScale, "scale factor is zero");
  std::vector<Eigenvalue> mapped;
  mapped.reserve(sp.distinct());
  for (const Eigenvalue& e : sp.entries()) mapped.push_back({mu * e.value + shift, e.multiplicity});
  return NormalSpectrum::from_entries(mapped, tol);
}

}  // namespace rankrange
