#include "diagcalc/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace diagcalc {

namespace {

using L = DiagramLayout;

int column(int x) { return L::margin + (x - 1) * L::spacing; }

void row_arcs(std::ostream& out, const std::vector<int>& points, int y, int direction) {
  for (std::size_t k = 1; k < points.size(); ++k) {
    const int a = column(points[k - 1]), b = column(points[k]);
    const int span = points[k] - points[k - 1];
    const int rise = std::min(L::arc_rise * span, L::arc_rise_max) * 2;
    out << "  <path d=\"M " << a << ' ' << y << " Q " << (a + b) / 2 << ' ' << y + direction * rise << ' ' << b << ' '
        << y << "\"/>\n";
  }
}

}  // namespace

std::string render_svg(const Partition& a) {
  const int n = a.degree();
  const int width = 2 * L::margin + std::max(0, n - 1) * L::spacing;
  const int height = 2 * L::margin + L::row_gap;
  const int top = L::margin, bottom = L::margin + L::row_gap;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" data-generator=\"" << L::version << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& block : a.blocks()) {
    std::vector<int> upper, lower;
    for (int v : block) (v > 0 ? upper : lower).push_back(v > 0 ? v : -v);
    std::sort(upper.begin(), upper.end());
    std::sort(lower.begin(), lower.end());
    row_arcs(out, upper, top, 1);
    row_arcs(out, lower, bottom, -1);
    if (!upper.empty() && !lower.empty()) {
      out << "  <line x1=\"" << column(upper.front()) << "\" y1=\"" << top << "\" x2=\"" << column(lower.front())
          << "\" y2=\"" << bottom << "\"/>\n";
    }
  }
  out << "</g>\n<g fill=\"black\">\n";
  for (int y : {top, bottom}) {
    for (int x = 1; x <= n; ++x) {
      out << "  <circle cx=\"" << column(x) << "\" cy=\"" << y << "\" r=\"" << L::radius << "\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace diagcalc
