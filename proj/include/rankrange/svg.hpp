#pragma once

#include <span>
#include <string>

#include "rankrange/geometry.hpp"

namespace rankrange::svg {

inline constexpr double kCanvas = 600.0;

/// SVG document showing the region shaded, eigenvalues as asterisks and any
/// reference polygon vertices as circles. The view fits every drawn point.
std::string render(const ConvexRegion& region, std::span<const CPoint> eigenvalues,
                   std::span<const CPoint> reference = {});

}  // namespace rankrange::svg
