#include "wakefarm/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wakefarm {

void TurbineSpec::validate() const {
  if (!(diameter > 0.0)) throw std::invalid_argument("TurbineSpec: diameter must be positive");
  if (!(thrust_coefficient > 0.0 && thrust_coefficient < 1.0))
    throw std::invalid_argument("TurbineSpec: thrust coefficient must lie in (0, 1)");
}

void Site::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max))
    throw std::invalid_argument("Site: require x_min < x_max and y_min < y_max");
}

double Site::diagonal() const { return std::hypot(width(), height()); }

Layout::Layout(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() % 2 != 0)
    throw std::invalid_argument("Layout: coordinate vector must have even length");
}

Layout Layout::pack(std::span<const Vec2> positions) {
  std::vector<double> coords;
  coords.reserve(2 * positions.size());
  for (const Vec2& p : positions) {
    coords.push_back(p.x);
    coords.push_back(p.y);
  }
  return Layout(std::move(coords));
}

std::vector<Vec2> Layout::unpack() const {
  std::vector<Vec2> out(turbine_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = position(i);
  return out;
}

Layout project_to_site(const Layout& layout, const Site& site) {
  Layout out = layout;
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = std::clamp(out[k], site.lower(k), site.upper(k));
  return out;
}

Layout regular_grid_layout(int n_rows, int n_cols, const Site& site) {
  if (n_rows < 1 || n_cols < 1)
    throw std::invalid_argument("regular_grid_layout: rows and columns must be >= 1");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n_rows) * n_cols);
  for (int i = 0; i < n_rows; ++i) {
    const double y = site.y_min + (i + 0.5) * site.height() / n_rows;
    for (int j = 0; j < n_cols; ++j) {
      const double x = site.x_min + (j + 0.5) * site.width() / n_cols;
      pts.push_back({x, y});
    }
  }
  return Layout::pack(pts);
}

namespace {

Layout line_layout(int n, Vec2 from, Vec2 to) {
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  if (n == 1) {
    pts[0] = 0.5 * (from + to);
  } else {
    for (int k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) / (n - 1);
      pts[static_cast<std::size_t>(k)] = from + t * (to - from);
    }
  }
  return Layout::pack(pts);
}

}  // namespace

Layout random_layout(int n_turbines, const Site& site, Rng& rng) {
  std::vector<double> coords(2 * static_cast<std::size_t>(n_turbines));
  for (std::size_t k = 0; k < coords.size(); ++k)
    coords[k] = rng.uniform(site.lower(k), site.upper(k));
  return Layout(std::move(coords));
}

std::vector<Layout> seeded_layouts(int n_turbines, const Site& site, RngSeed seed, int n_random,
                                   double margin) {
  if (n_turbines < 1) throw std::invalid_argument("seeded_layouts: need at least one turbine");
  site.validate();
  const double m = std::clamp(margin, 0.0, 0.5 * std::min(site.width(), site.height()));
  const double x0 = site.x_min + m, x1 = site.x_max - m;
  const double y0 = site.y_min + m, y1 = site.y_max - m;

  std::vector<Layout> out;
  out.push_back(line_layout(n_turbines, {x0, y0}, {x1, y0}));  // bottom
  out.push_back(line_layout(n_turbines, {x0, y1}, {x1, y1}));  // top
  out.push_back(line_layout(n_turbines, {x0, y0}, {x0, y1}));  // left
  out.push_back(line_layout(n_turbines, {x1, y0}, {x1, y1}));  // right
  out.push_back(line_layout(n_turbines, {x0, y0}, {x1, y1}));
  out.push_back(line_layout(n_turbines, {x0, y1}, {x1, y0}));
  for (int rows = 1; rows <= n_turbines; ++rows) {
    if (n_turbines % rows == 0) out.push_back(regular_grid_layout(rows, n_turbines / rows, site));
  }

  Rng rng(seed);
  for (int r = 0; r < n_random; ++r) out.push_back(random_layout(n_turbines, site, rng));
  for (auto& layout : out) layout = project_to_site(layout, site);
  return out;
}

double min_pairwise_distance(const Layout& layout) {
  const std::size_t n = layout.turbine_count();
  if (n < 2) throw std::invalid_argument("min_pairwise_distance: need at least two turbines");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      best = std::min(best, norm(layout.position(i) - layout.position(j)));
  return best;
}

void write_layout_csv(std::ostream& out, const Layout& layout) {
  out << "turbine,x,y\n";
  char buf[128];
  for (std::size_t i = 0; i < layout.turbine_count(); ++i) {
    const Vec2 p = layout.position(i);
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f\n", i + 1, p.x, p.y);
    out << buf;
  }
}

Layout read_layout_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("turbine,x,y", 0) != 0)
    throw std::runtime_error("layout csv: missing `turbine,x,y` header");
  std::vector<double> coords;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream row(line);
    std::string idx, xs, ys;
    if (!std::getline(row, idx, ',') || !std::getline(row, xs, ',') || !std::getline(row, ys))
      throw std::runtime_error("layout csv: malformed row `" + line + "`");
    coords.push_back(std::stod(xs));
    coords.push_back(std::stod(ys));
  }
  return Layout(std::move(coords));
}

}  // namespace wakefarm
