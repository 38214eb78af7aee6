#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace wakefarm::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kPad = 20.0;
constexpr double kPlotHeight = 240.0;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

void circles(std::ostream& out, const Layout& layout, double r, bool filled) {
  for (std::size_t i = 0; i < layout.turbine_count(); ++i) {
    const Vec2 p = layout.position(i);
    out << fmt("    <circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" ", p.x, p.y, r)
        << (filled ? "fill=\"#1f4e79\" stroke=\"none\"/>\n" : "fill=\"none\" stroke=\"#c0504d\" stroke-width=\"1.5\"/>\n");
  }
}

}  // namespace

void render_svg(std::ostream& out, const RenderInput& in) {
  const Site& s = in.site;
  const double inner = kWidth - 2.0 * kPad;
  const double layout_height = inner * s.height() / s.width();
  const bool plot = !in.stage1.empty() || !in.stage2.empty();
  const double total = kPad + layout_height + kPad + (plot ? kPlotHeight + kPad : 0.0);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
             kWidth, total, kWidth, total);
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << fmt("  <svg id=\"layout\" x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" height=\"%.6f\" ", kPad, kPad, inner, layout_height)
      << fmt("viewBox=\"%.6f %.6f %.6f %.6f\" preserveAspectRatio=\"none\">\n", s.x_min, s.y_min, s.width(), s.height());
  out << fmt("   <g transform=\"matrix(1 0 0 -1 0 %.6f)\">\n", s.y_min + s.y_max);
  out << fmt("    <rect x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" height=\"%.6f\" ", s.x_min, s.y_min, s.width(), s.height())
      << "fill=\"#eef4fa\" stroke=\"black\" stroke-dasharray=\"4 3\" vector-effect=\"non-scaling-stroke\"/>\n";
  circles(out, in.initial, in.turbine_radius, false);
  circles(out, in.final_layout, in.turbine_radius, true);
  out << "   </g>\n  </svg>\n";

  if (plot) {
    const double top = kPad + layout_height + kPad;
    double jmin = std::numeric_limits<double>::infinity();
    double jmax = -jmin;
    long offset = in.stage1.empty() ? 0 : in.stage1.records.back().evaluations;
    long emax = offset + (in.stage2.empty() ? 0 : in.stage2.records.back().evaluations);
    for (const auto* t : {&in.stage1, &in.stage2})
      for (const auto& r : t->records) {
        jmin = std::min(jmin, r.best_value);
        jmax = std::max(jmax, r.best_value);
      }
    if (!(jmax > jmin)) jmax = jmin + 1.0;
    if (emax <= 0) emax = 1;

    out << fmt("  <g id=\"convergence\" transform=\"translate(%.6f %.6f)\">\n", kPad, top);
    out << fmt("   <rect width=\"%.6f\" height=\"%.6f\" fill=\"none\" stroke=\"black\"/>\n", inner, kPlotHeight);
    const char* colours[] = {"#c0504d", "#1f4e79"};
    for (int k = 0; k < 2; ++k) {
      const ConvergenceTrace& t = k == 0 ? in.stage1 : in.stage2;
      if (t.empty()) continue;
      const long shift = k == 0 ? 0 : offset;
      out << "   <polyline fill=\"none\" stroke=\"" << colours[k] << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < t.records.size(); ++i) {
        const auto& r = t.records[i];
        const double x = inner * static_cast<double>(r.evaluations + shift) / static_cast<double>(emax);
        const double y = kPlotHeight * (1.0 - (r.best_value - jmin) / (jmax - jmin));
        out << (i ? " " : "") << fmt("%.3f,%.3f", x, y);
      }
      out << "\"/>\n";
    }
    out << fmt("   <text x=\"4\" y=\"%.0f\" font-size=\"11\" font-family=\"sans-serif\">best J vs evaluations</text>\n",
               kPlotHeight - 6.0);
    out << "  </g>\n";
  }
  out << "</svg>\n";
}

}  // namespace wakefarm::cli
