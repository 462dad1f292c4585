#include "rankrange/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "rankrange/errors.hpp"

namespace rankrange::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double number(const Json& v, const char* what) {
  if (!v.is_number()) bad(std::string("expected a number for ") + what);
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(std::string("non-finite ") + what);
  return x;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

const Json& list_under(const Json& doc, const char* key) {
  const Json& list = doc.is_array() ? doc : field(doc, key);
  if (!list.is_array()) bad(std::string("\"") + key + "\" must be a list");
  return list;
}

Json rounded(const Json& doc) {
  if (doc.is_number_float()) return round_digits(doc.get<double>());
  if (doc.is_array() || doc.is_object()) {
    Json out = doc;
    for (auto& item : out) item = rounded(item);
    return out;
  }
  return doc;
}

RegionKind kind_from_string(const std::string& tag) {
  for (RegionKind k : {RegionKind::Empty, RegionKind::Point, RegionKind::Segment,
                       RegionKind::Polygon}) {
    if (tag == to_string(k)) return k;
  }
  bad("unknown region tag \"" + tag + "\"");
}

}  // namespace

double round_digits(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", kDigits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed input: ") + e.what());
  }
}

std::string dump(const Json& doc, int indent) { return rounded(doc).dump(indent); }

Json point_to_json(CPoint z) { return Json::array({z.real(), z.imag()}); }

CPoint point_from_json(const Json& doc) {
  if (!doc.is_array() || doc.size() != 2) bad("a point is [re, im]");
  return {number(doc[0], "real part"), number(doc[1], "imaginary part")};
}

NormalSpectrum spectrum_from_json(const Json& doc, const Tolerance& tol) {
  std::vector<Eigenvalue> entries;
  for (const Json& item : list_under(doc, "spectrum")) {
    if (!item.is_array() || item.size() < 2 || item.size() > 3) {
      bad("spectrum entries are [re, im] or [re, im, multiplicity]");
    }
    Eigenvalue e;
    e.value = {number(item[0], "real part"), number(item[1], "imaginary part")};
    if (item.size() == 3) {
      if (!item[2].is_number_integer() || item[2].get<long long>() < 1) {
        bad("multiplicity must be a positive integer");
      }
      e.multiplicity = item[2].get<std::size_t>();
    }
    entries.push_back(e);
  }
  if (entries.empty()) bad("empty spectrum");
  return NormalSpectrum::from_entries(entries, tol);
}

Json to_json(const NormalSpectrum& sp) {
  Json out = Json::array();
  for (const Eigenvalue& e : sp.entries()) {
    out.push_back(Json::array({e.value.real(), e.value.imag(), e.multiplicity}));
  }
  return out;
}

std::optional<std::size_t> rank_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("k")) return std::nullopt;
  const Json& k = doc.at("k");
  if (!k.is_number_integer() || k.get<long long>() < 0) bad("k must be a nonnegative integer");
  return k.get<std::size_t>();
}

std::vector<CPoint> vertices_from_json(const Json& doc) {
  std::vector<CPoint> pts;
  for (const Json& v : list_under(doc, "vertices")) pts.push_back(point_from_json(v));
  return pts;
}

PolygonSpec polygon_from_json(const Json& doc, const Tolerance& tol) {
  if (doc.is_object() && doc.contains("support")) {
    std::vector<HalfPlane> planes;
    for (const Json& item : list_under(doc, "support")) {
      if (!item.is_array() || item.size() != 2) bad("support entries are [d, xi]");
      planes.emplace_back(number(item[0], "offset"), number(item[1], "angle"));
    }
    return polygon_from_support(planes, tol);
  }
  return polygon_to_support(vertices_from_json(doc), tol);
}

Json to_json(const PolygonSpec& polygon) {
  Json support = Json::array();
  for (const HalfPlane& h : polygon.support) support.push_back(Json::array({h.d, h.xi}));
  Json vertices = Json::array();
  for (CPoint v : polygon.vertices) vertices.push_back(point_to_json(v));
  return {{"support", support}, {"vertices", vertices}};
}

std::vector<double> angles_from_json(const Json& doc) {
  std::vector<double> out;
  for (const Json& a : list_under(doc, "angles")) out.push_back(number(a, "angle"));
  return out;
}

Json to_json(const ConvexRegion& region) {
  Json vertices = Json::array();
  for (CPoint v : region.vertices()) vertices.push_back(point_to_json(v));
  return {{"tag", to_string(region.kind())}, {"vertices", vertices}};
}

ConvexRegion region_from_json(const Json& doc) {
  const Json& tag = field(doc, "tag");
  if (!tag.is_string()) bad("region tag must be a string");
  const RegionKind kind = kind_from_string(tag.get<std::string>());
  const std::vector<CPoint> v = vertices_from_json(doc);
  const std::size_t expected = kind == RegionKind::Empty ? 0 : kind == RegionKind::Point ? 1 : 2;
  if (kind == RegionKind::Polygon ? v.size() < 3 : v.size() != expected) {
    bad("vertex count does not match region tag");
  }
  switch (kind) {
    case RegionKind::Empty: return ConvexRegion::empty();
    case RegionKind::Point: return ConvexRegion::point(v[0]);
    case RegionKind::Segment: return ConvexRegion::segment(v[0], v[1]);
    case RegionKind::Polygon: return ConvexRegion::polygon(v);
  }
  bad("unknown region tag");
}

Json to_json(const SynthesisOutput& out) {
  return {{"n", out.n},
          {"q", out.q},
          {"spectrum", to_json(out.spectrum)},
          {"directions", out.directions},
          {"offsets", out.offsets},
          {"added", out.added}};
}

SynthesisOutput synthesis_from_json(const Json& doc, const Tolerance& tol) {
  SynthesisOutput out;
  const Json& n = field(doc, "n");
  const Json& q = field(doc, "q");
  if (!n.is_number_unsigned() || !q.is_number_unsigned()) bad("n and q must be nonnegative");
  out.n = n.get<std::size_t>();
  out.q = q.get<std::size_t>();
  out.spectrum = spectrum_from_json(field(doc, "spectrum"), tol);
  auto numbers = [&](const char* key) {
    const Json& list = field(doc, key);
    if (!list.is_array()) bad(std::string("\"") + key + "\" must be a list");
    std::vector<double> values;
    for (const Json& x : list) values.push_back(number(x, key));
    return values;
  };
  out.directions = numbers("directions");
  out.offsets = numbers("offsets");
  out.added = numbers("added");
  return out;
}

}  // namespace rankrange::io
