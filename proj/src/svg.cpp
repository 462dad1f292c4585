#include "rankrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace rankrange::svg {

namespace {

constexpr double kPadding = 0.1;
constexpr double kMarker = 4.0;

// Maps the plane onto the canvas with a shared scale and y pointing up.
class View {
 public:
  explicit View(const std::vector<CPoint>& pts) {
    double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
    if (!pts.empty()) {
      x0 = x1 = pts.front().real();
      y0 = y1 = pts.front().imag();
      for (CPoint p : pts) {
        x0 = std::min(x0, p.real());
        x1 = std::max(x1, p.real());
        y0 = std::min(y0, p.imag());
        y1 = std::max(y1, p.imag());
      }
    }
    double span = std::max(x1 - x0, y1 - y0);
    if (span <= 0.0) span = 2.0;
    span *= 1.0 + 2.0 * kPadding;
    scale_ = kCanvas / span;
    center_ = CPoint((x0 + x1) / 2.0, (y0 + y1) / 2.0);
  }

  double x(CPoint p) const { return kCanvas / 2.0 + (p.real() - center_.real()) * scale_; }
  double y(CPoint p) const { return kCanvas / 2.0 - (p.imag() - center_.imag()) * scale_; }

 private:
  double scale_ = 1.0;
  CPoint center_;
};

void asterisk(std::ostringstream& os, double x, double y) {
  for (int i = 0; i < 3; ++i) {
    const double a = kPi / 2.0 + i * kPi / 3.0;
    const double dx = kMarker * std::cos(a);
    const double dy = kMarker * std::sin(a);
    os << "<line x1=\"" << x - dx << "\" y1=\"" << y - dy << "\" x2=\"" << x + dx << "\" y2=\""
       << y + dy << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
}

}  // namespace

std::string render(const ConvexRegion& region, std::span<const CPoint> eigenvalues,
                   std::span<const CPoint> reference) {
  std::vector<CPoint> all(eigenvalues.begin(), eigenvalues.end());
  all.insert(all.end(), reference.begin(), reference.end());
  all.insert(all.end(), region.vertices().begin(), region.vertices().end());
  const View view(all);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
     << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto& v = region.vertices();
  switch (region.kind()) {
    case RegionKind::Empty:
      break;
    case RegionKind::Point:
      os << "<circle cx=\"" << view.x(v[0]) << "\" cy=\"" << view.y(v[0])
         << "\" r=\"3\" fill=\"steelblue\"/>\n";
      break;
    case RegionKind::Segment:
      os << "<line x1=\"" << view.x(v[0]) << "\" y1=\"" << view.y(v[0]) << "\" x2=\""
         << view.x(v[1]) << "\" y2=\"" << view.y(v[1])
         << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
      break;
    case RegionKind::Polygon:
      os << "<polygon points=\"";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? " " : "") << view.x(v[i]) << ',' << view.y(v[i]);
      }
      os << "\" fill=\"steelblue\" fill-opacity=\"0.3\" stroke=\"steelblue\"/>\n";
      break;
  }

  for (CPoint p : reference) {
    os << "<circle cx=\"" << view.x(p) << "\" cy=\"" << view.y(p) << "\" r=\"" << kMarker
       << "\" fill=\"none\" stroke=\"darkred\"/>\n";
  }
  for (CPoint p : eigenvalues) asterisk(os, view.x(p), view.y(p));
  os << "</svg>\n";
  return os.str();
}

}  // namespace rankrange::svg
