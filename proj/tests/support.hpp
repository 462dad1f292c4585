#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rankrange/geometry.hpp"
#include "rankrange/spectrum.hpp"

namespace testing {

using rankrange::CPoint;
using rankrange::kPi;
using rankrange::kTwoPi;

inline CPoint unit(double xi) { return std::polar(1.0, xi); }

/// e^{2πi j/n} for the listed j.
inline std::vector<CPoint> roots(int n, const std::vector<int>& js) {
  std::vector<CPoint> out;
  for (int j : js) out.push_back(unit(kTwoPi * j / n));
  return out;
}

inline std::vector<CPoint> roots(int n) {
  std::vector<int> js(n);
  for (int j = 0; j < n; ++j) js[j] = j;
  return roots(n, js);
}

inline std::vector<double> root_angles(int n, const std::vector<int>& js) {
  std::vector<double> out;
  for (int j : js) out.push_back(kTwoPi * j / n);
  return out;
}

inline rankrange::NormalSpectrum spectrum(const std::vector<CPoint>& values) {
  return rankrange::NormalSpectrum::from_values(values);
}

/// Small-integer spectra with repeats and occasional collinear layouts, so
/// degenerate configurations come up often.
inline std::vector<CPoint> random_lattice_values(std::mt19937& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
  const int reach = 1 + static_cast<int>(rng() % 3);
  std::uniform_int_distribution<int> coord(-reach, reach);
  const bool collinear = rng() % 6 == 0;
  std::vector<CPoint> values;
  for (int i = 0; i < n; ++i) {
    if (collinear) {
      const int t = coord(rng);
      values.emplace_back(t, 2 * t - 1);
    } else if (i > 0 && rng() % 4 == 0) {
      values.push_back(values[rng() % static_cast<unsigned>(i)]);
    } else {
      values.emplace_back(coord(rng), coord(rng));
    }
  }
  return values;
}

/// Gaussian spectra, again with occasional repeats.
inline std::vector<CPoint> random_gaussian_values(std::mt19937& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<CPoint> values;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && rng() % 5 == 0) {
      values.push_back(values[rng() % static_cast<unsigned>(i)]);
    } else {
      values.emplace_back(g(rng), g(rng));
    }
  }
  return values;
}

/// Convex polygon with p vertices at radii in [0.5, 1.5] and sorted angles
/// whose largest gap is below π. Returns empty if the draw is not in convex
/// position.
inline std::vector<CPoint> random_convex_polygon(std::mt19937& rng, int p) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  std::vector<double> xs;
  for (int i = 0; i < p; ++i) xs.push_back(angle(rng));
  std::sort(xs.begin(), xs.end());
  for (int i = 0; i < p; ++i) {
    const double gap = i + 1 < p ? xs[i + 1] - xs[i] : xs[0] + kTwoPi - xs[i];
    if (gap >= kPi - 0.05 || gap < 0.05) return {};
  }
  std::vector<CPoint> pts;
  for (double x : xs) pts.push_back(std::polar(radius(rng), x));
  for (int i = 0; i < p; ++i) {
    const CPoint a = pts[i];
    const CPoint b = pts[(i + 1) % p];
    const CPoint c = pts[(i + 2) % p];
    if (std::imag(std::conj(b - a) * (c - b)) <= 1e-3) return {};
  }
  return pts;
}

/// Directions drawn uniformly, sometimes with exact antipodal partners.
inline std::vector<double> random_directions(std::mt19937& rng, int p) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> out;
  for (int i = 0; i < p; ++i) {
    if (i > 0 && rng() % 4 == 0) {
      out.push_back(std::fmod(out[rng() % static_cast<unsigned>(i)] + kPi, kTwoPi));
    } else {
      out.push_back(angle(rng));
    }
  }
  return out;
}

}  // namespace testing
