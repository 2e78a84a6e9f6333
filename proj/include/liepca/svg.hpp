#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liepca {

struct SvgPanel {
  std::string title;
  std::vector<std::pair<double, double>> points;
};

/// One row of square scatter panels sharing a viewbox centered at the origin.
/// No timestamps or other run-dependent content: output is byte-stable.
inline void write_scatter_svg(std::ostream& os,
                              const std::vector<std::vector<SvgPanel>>& rows,
                              double half_extent) {
  const int panel = 220, margin = 14, title_h = 20;
  std::size_t ncols = 0;
  for (const auto& row : rows) ncols = std::max(ncols, row.size());
  const int width = static_cast<int>(ncols) * (panel + margin) + margin;
  const int height = static_cast<int>(rows.size()) * (panel + title_h + margin) + margin;

  const auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    for (std::size_t ci = 0; ci < rows[ri].size(); ++ci) {
      const SvgPanel& p = rows[ri][ci];
      const int x0 = margin + static_cast<int>(ci) * (panel + margin);
      const int y0 = margin + static_cast<int>(ri) * (panel + title_h + margin);
      os << "  <text x=\"" << x0 + panel / 2 << "\" y=\"" << y0 + 14
         << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
         << p.title << "</text>\n";
      os << "  <rect x=\"" << x0 << "\" y=\"" << y0 + title_h << "\" width=\""
         << panel << "\" height=\"" << panel
         << "\" fill=\"white\" stroke=\"#888\"/>\n";
      for (const auto& [px, py] : p.points) {
        if (std::abs(px) > half_extent || std::abs(py) > half_extent) continue;
        const double sx = x0 + (px / half_extent + 1.0) * 0.5 * panel;
        const double sy = y0 + title_h + (1.0 - (py / half_extent + 1.0) * 0.5) * panel;
        os << "  <circle cx=\"" << fmt(sx) << "\" cy=\"" << fmt(sy)
           << "\" r=\"2\" fill=\"#20639b\" fill-opacity=\"0.75\"/>\n";
      }
    }
  }
  os << "</svg>\n";
}

inline void write_scatter_svg_file(const std::string& path,
                                   const std::vector<std::vector<SvgPanel>>& rows,
                                   double half_extent) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_scatter_svg(os, rows, half_extent);
}

}  // namespace liepca
