#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankrange/geometry.hpp"
#include "rankrange/spectrum.hpp"
#include "rankrange/synthesis.hpp"

namespace rankrange::io {

using Json = nlohmann::json;

/// Significant digits kept in every emitted number.
inline constexpr int kDigits = 12;

double round_digits(double x);

/// Parses a document; throws InvalidInput on malformed text.
Json parse(const std::string& text);
/// Compact text with numbers rounded to `kDigits` significant digits.
std::string dump(const Json& doc, int indent = -1);

/// A spectrum is a list of [re, im] or [re, im, multiplicity] entries,
/// either bare or under the key "spectrum".
NormalSpectrum spectrum_from_json(const Json& doc, const Tolerance& tol = {});
Json to_json(const NormalSpectrum& sp);

/// Rank stored under "k", if any.
std::optional<std::size_t> rank_from_json(const Json& doc);

/// {"vertices": [[re, im], ...]} or {"support": [[d, xi], ...]}.
PolygonSpec polygon_from_json(const Json& doc, const Tolerance& tol = {});
/// Raw vertex list of a polygon document, before validation.
std::vector<CPoint> vertices_from_json(const Json& doc);
Json to_json(const PolygonSpec& polygon);

/// A bare list of angles in radians or {"angles": [...]}.
std::vector<double> angles_from_json(const Json& doc);

/// {"tag": "Segment", "vertices": [[re, im], ...]}.
Json to_json(const ConvexRegion& region);
ConvexRegion region_from_json(const Json& doc);

Json to_json(const SynthesisOutput& out);
SynthesisOutput synthesis_from_json(const Json& doc, const Tolerance& tol = {});

Json point_to_json(CPoint z);
CPoint point_from_json(const Json& doc);

}  // namespace rankrange::io
