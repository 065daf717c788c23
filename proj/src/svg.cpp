#include "plucker/svg.hpp"

#include "plucker/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace plucker {

namespace {

constexpr double kUnit = 32;    // pixels per lattice step
constexpr double kMargin = 28;  // room for titles and labels
constexpr double kFanSize = 260;

struct Panel {
  std::string body;
  double width = 0, height = 0;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Panel polygon_panel(const LatticePolygon& p, const std::string& title) {
  const LatticePoint lo = p.min_corner() - LatticePoint{1, 1};
  const LatticePoint hi = p.max_corner() + LatticePoint{1, 1};
  const double w = static_cast<double>(hi.x - lo.x) * kUnit, h = static_cast<double>(hi.y - lo.y) * kUnit;
  auto px = [&](Int x) { return kMargin + static_cast<double>(x - lo.x) * kUnit; };
  auto py = [&](Int y) { return kMargin + static_cast<double>(hi.y - y) * kUnit; };

  std::ostringstream os;
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 10 << "\" font-size=\"14\">" << escape(title)
     << "</text>\n";
  // Axes through the origin when it is in view.
  if (lo.x <= 0 && 0 <= hi.x)
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(hi.y) << "\" x2=\"" << px(0) << "\" y2=\"" << py(lo.y)
       << "\" stroke=\"#999\"/>\n";
  if (lo.y <= 0 && 0 <= hi.y)
    os << "<line x1=\"" << px(lo.x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(hi.x) << "\" y2=\"" << py(0)
       << "\" stroke=\"#999\"/>\n";
  os << "<polygon points=\"";
  for (const auto& v : p.vertices()) os << px(v.x) << ',' << py(v.y) << ' ';
  os << "\" fill=\"#cfe2f3\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << (p.contains({x, y}) ? 3.5 : 1.5)
         << "\" fill=\"" << (p.contains({x, y}) ? "#1f4e79" : "#bbb") << "\"/>\n";
  return {os.str(), w + 2 * kMargin, h + 2 * kMargin};
}

Panel fan_panel(const WeightedFan& fan, const std::string& title) {
  const double c = kMargin + kFanSize / 2;
  std::ostringstream os;
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 10 << "\" font-size=\"14\">" << escape(title)
     << "</text>\n";
  os << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"3\" fill=\"#333\"/>\n";
  for (const auto& [g, w] : fan.normalized().ccw()) {
    const double len = std::hypot(static_cast<double>(g.u()), static_cast<double>(g.v()));
    const double dx = static_cast<double>(g.u()) / len, dy = -static_cast<double>(g.v()) / len;
    const double r = kFanSize / 2 - 18;
    const double x = c + r * dx, y = c + r * dy;
    os << "<line x1=\"" << c << "\" y1=\"" << c << "\" x2=\"" << x << "\" y2=\"" << y
       << "\" stroke=\"#a61c00\" stroke-width=\"" << 1 + std::min<Int>(w, 6) << "\"/>\n";
    // Arrow head.
    const double hx = -dy, hy = dx;
    os << "<polygon points=\"" << x + 8 * dx << ',' << y + 8 * dy << ' ' << x + 5 * hx << ',' << y + 5 * hy << ' '
       << x - 5 * hx << ',' << y - 5 * hy << "\" fill=\"#a61c00\"/>\n";
    os << "<text x=\"" << c + (r - 22) * dx + 8 * hx << "\" y=\"" << c + (r - 22) * dy + 8 * hy + 4
       << "\" font-size=\"12\">(" << g.u() << ',' << g.v() << ") w=" << w << "</text>\n";
  }
  return {os.str(), kFanSize + 2 * kMargin, kFanSize + 2 * kMargin};
}

std::string document(const std::vector<Panel>& panels) {
  double width = 0, height = 0;
  for (const auto& p : panels) {
    width += p.width;
    height = std::max(height, p.height);
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double x = 0;
  for (const auto& p : panels) {
    os << "<g transform=\"translate(" << x << ",0)\">\n" << p.body << "</g>\n";
    x += p.width;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string polygon_svg(const LatticePolygon& p, const std::string& title) {
  return document({polygon_panel(p, title)});
}

std::string fan_svg(const WeightedFan& fan, const std::string& title) { return document({fan_panel(fan, title)}); }

std::string render_svg(const LatticePolygon& p) {
  return document({polygon_panel(p, "P " + to_json_array(p)), fan_panel(dual_fan(p), "dual fan"),
                   polygon_panel(dual_polygon(p), "dual polygon")});
}

}  // namespace plucker
