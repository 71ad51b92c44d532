#include "cech/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cech {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 60.0;

const char* dim_color(int dim) {
  switch (dim % 6) {
    case 0: return "#1f77b4";
    case 1: return "#d62728";
    case 2: return "#2ca02c";
    case 3: return "#9467bd";
    case 4: return "#ff7f0e";
    default: return "#8c564b";
  }
}

std::string svg_header(double w, double h) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  return out.str();
}

}  // namespace

std::string plot_diagram_svg(const PersistenceDiagram& diagram, double alpha_max) {
  if (alpha_max <= 0.0) alpha_max = 1.0;
  const double span = kSize - 2.0 * kMargin;
  auto sx = [&](double v) { return kMargin + span * (v / alpha_max); };
  auto sy = [&](double v) { return kSize - kMargin - span * (v / alpha_max); };

  std::ostringstream out;
  out << svg_header(kSize, kSize);
  // axes and diagonal
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(alpha_max)
      << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\""
      << sy(alpha_max) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(alpha_max)
      << "\" y2=\"" << sy(alpha_max) << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  out << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - kMargin / 3
      << "\" text-anchor=\"middle\" font-size=\"14\">birth</text>\n";
  out << "<text x=\"" << kMargin / 3 << "\" y=\"" << kSize / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 " << kMargin / 3
      << " " << kSize / 2 << ")\">death</text>\n";

  for (const Interval& iv : diagram.intervals) {
    const char* color = dim_color(iv.dim);
    if (iv.essential()) {
      // triangle along the top edge at the birth abscissa
      const double x = sx(iv.birth), y = sy(alpha_max);
      out << "<polygon class=\"essential\" points=\"" << x << "," << y - 6 << " " << x - 6 << ","
          << y + 5 << " " << x + 6 << "," << y + 5 << "\" fill=\"" << color << "\"/>\n";
    } else {
      out << "<circle class=\"finite\" cx=\"" << sx(iv.birth) << "\" cy=\"" << sy(iv.death)
          << "\" r=\"4\" fill=\"" << color << "\" fill-opacity=\"0.8\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string plot_trace_svg(const RunTrace& trace) {
  const double w = 820.0, h = 520.0;
  double max_scale = 1e-12, max_count = 1.0;
  for (const TraceSample& s : trace.samples) {
    max_scale = std::max(max_scale, s.scale);
    max_count = std::max(max_count, static_cast<double>(s.simplex_count));
  }
  const double spanx = w - 2.0 * kMargin, spany = h - 2.0 * kMargin;
  auto sx = [&](double v) { return kMargin + spanx * (v / max_scale); };
  auto sy = [&](double c) { return h - kMargin - spany * (c / max_count); };

  std::ostringstream out;
  out << svg_header(w, h);
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_scale)
      << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\""
      << sy(max_count) << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"" << h - kMargin / 3
      << "\" text-anchor=\"middle\" font-size=\"14\">scale</text>\n";
  out << "<text x=\"" << kMargin / 3 << "\" y=\"" << h / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 " << kMargin / 3
      << " " << h / 2 << ")\">simplices</text>\n";

  if (!trace.samples.empty()) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const TraceSample& s : trace.samples)
      out << sx(s.scale) << "," << sy(static_cast<double>(s.simplex_count)) << " ";
    out << "\"/>\n";
    for (const TraceSample& s : trace.samples)
      if (s.tag == TraceSample::Tag::Collapse)
        out << "<circle class=\"collapse\" cx=\"" << sx(s.scale) << "\" cy=\""
            << sy(static_cast<double>(s.simplex_count)) << "\" r=\"3\" fill=\"#d62728\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cech
