#include "wakefarm/scenario.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wakefarm/bathymetry.hpp"

namespace wakefarm {

namespace {

constexpr double kInflow = 2.0;      // m/s
constexpr double kChannelWidth = 320.0;
constexpr double kChannelLength = 640.0;
constexpr double kFixtureSpacing = 5.0;

const Site kCentralSite{160.0, 480.0, 80.0, 240.0};

GridGeometry fixture_grid() {
  const int nx = static_cast<int>(kChannelLength / kFixtureSpacing) + 1;
  const int ny = static_cast<int>(kChannelWidth / kFixtureSpacing) + 1;
  return {nx, ny, 0.0, 0.0, kFixtureSpacing, kFixtureSpacing};
}

// Continuity flow between a bank profile and a straight opposite bank. The
// stream function is psi = Q (y - low) / (high - low) with Q the volume flux
// per unit depth, so the field is divergence free.
template <class Low, class High>
GriddedField banked_channel_field(Low low, High high) {
  const double q = kInflow * kChannelWidth;
  const GridGeometry grid = fixture_grid();
  GriddedField field{grid, std::vector<Vec2>(grid.node_count())};
  constexpr double h = 1e-4;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Vec2 p = grid.node(i, j);
      auto psi = [&](double x, double y) { return q * (y - low(x)) / (high(x) - low(x)); };
      const double u = q / (high(p.x) - low(p.x));
      const double v = -(psi(p.x + h, p.y) - psi(p.x - h, p.y)) / (2.0 * h);
      field.samples[grid.index(i, j)] = {u, v};
    }
  }
  return field;
}

double headland(double x) { return 120.0 * std::exp(-std::pow((x - 320.0) / 80.0, 2)); }
double island_ceiling(double x) { return kChannelWidth - 170.0 * std::exp(-std::pow((x - 320.0) / 100.0, 2)); }

GriddedField headland_field() {
  return banked_channel_field(headland, [](double) { return kChannelWidth; });
}

Scenario base(std::string name, int n_turbines, Site site) {
  Scenario s;
  s.name = std::move(name);
  s.site = site;
  s.initial_region = site;
  s.n_turbines = n_turbines;
  return s;
}

}  // namespace

void Scenario::validate() const {
  site.validate();
  initial_region.validate();
  turbine.validate();
  if (!ambient) throw std::invalid_argument("Scenario `" + name + "`: no ambient flow");
  if (n_turbines < 1) throw std::invalid_argument("Scenario `" + name + "`: n_turbines must be >= 1");
  if (initial_region.x_min < site.x_min || initial_region.x_max > site.x_max ||
      initial_region.y_min < site.y_min || initial_region.y_max > site.y_max)
    throw std::invalid_argument("Scenario `" + name + "`: initial region leaves the site");
}

Layout Scenario::initial_layout() const {
  const double aspect = initial_region.width() / initial_region.height();
  int best_rows = 1;
  double best_err = std::numeric_limits<double>::infinity();
  for (int rows = 1; rows <= n_turbines; ++rows) {
    if (n_turbines % rows != 0) continue;
    const int cols = n_turbines / rows;
    const double err = std::abs(std::log(static_cast<double>(cols) / rows / aspect));
    if (err < best_err - 1e-12) {
      best_err = err;
      best_rows = rows;
    }
  }
  return regular_grid_layout(best_rows, n_turbines / best_rows, initial_region);
}

std::vector<Layout> Scenario::global_seeds(RngSeed seed, int n_random) const {
  std::vector<Layout> seeds{initial_layout()};
  for (auto& l : seeded_layouts(n_turbines, site, seed, n_random)) seeds.push_back(std::move(l));
  return seeds;
}

std::vector<std::string> scenario_names() {
  return {"channel-1", "headland-3", "island-4", "bathymetry-1", "bathymetry-2", "bathymetry-3", "double-basin"};
}

Scenario make_scenario(const std::string& name, int n_turbines) {
  if (n_turbines < 1) throw std::invalid_argument("make_scenario: n_turbines must be >= 1");

  if (name == "channel-1") {
    Scenario s = base(name, n_turbines, kCentralSite);
    s.ambient = uniform_flow({kInflow, 0.0});
    s.flow_description = "uniform 2 m/s";
    return s;
  }
  if (name == "headland-3") {
    Scenario s = base(name, n_turbines, {160.0, 480.0, 140.0, 300.0});
    s.ambient = gridded_flow(headland_field());
    s.flow_description = "gridded flow past a headland";
    return s;
  }
  if (name == "island-4") {
    Scenario s = base(name, n_turbines, {160.0, 480.0, 0.0, 140.0});
    s.ambient = gridded_flow(banked_channel_field([](double) { return 0.0; }, island_ceiling));
    s.flow_description = "gridded flow beneath an island";
    return s;
  }
  if (name == "bathymetry-1") {
    Scenario s = base(name, n_turbines, kCentralSite);
    auto profile = ramp_bathymetry(160.0, 320.0, 330.0);
    s.flow_description = profile->describe();
    s.ambient = channel_continuity_flow(std::move(profile), kInflow, 25.0, {1.0, 0.0});
    return s;
  }
  if (name == "bathymetry-2") {
    Scenario s = base(name, n_turbines, kCentralSite);
    auto profile = random_bump_bathymetry(RngSeed{2}, kCentralSite);
    s.flow_description = profile->describe();
    s.ambient = channel_continuity_flow(std::move(profile), kInflow, 25.0, {1.0, 0.0});
    return s;
  }
  if (name == "bathymetry-3") {
    Scenario s = base(name, n_turbines, {160.0, 480.0, 140.0, 300.0});
    auto profile = random_bump_bathymetry(RngSeed{3}, s.site);
    GriddedField field = headland_field();
    for (int j = 0; j < field.grid.ny; ++j)
      for (int i = 0; i < field.grid.nx; ++i) {
        Vec2& u = field.samples[field.grid.index(i, j)];
        u = (25.0 / profile->depth(field.grid.node(i, j))) * u;
      }
    s.flow_description = "headland flow over " + profile->describe();
    s.ambient = gridded_flow(std::move(field));
    return s;
  }
  if (name == "double-basin") return make_double_basin_scenario(2.5, 1.5, 1.0, n_turbines);
  throw std::invalid_argument("make_scenario: unknown scenario `" + name + "`");
}

Scenario make_double_basin_scenario(double fast_speed, double slow_speed, double barrier_speed,
                                    int n_turbines) {
  if (!(barrier_speed > 0.0 && slow_speed >= barrier_speed && fast_speed >= slow_speed))
    throw std::invalid_argument("make_double_basin_scenario: need fast >= slow >= barrier > 0");
  constexpr double h_in = 50.0;
  const double flux = kInflow * h_in;
  auto profile = speed_profile_bathymetry({{100.0, slow_speed}, {150.0, barrier_speed}, {200.0, fast_speed}}, flux);

  Scenario s = base("double-basin", n_turbines, Site{0.0, 320.0, 0.0, 160.0});
  s.initial_region = Site{0.0, 100.0, 0.0, 160.0};
  s.flow_description = profile->describe();
  s.ambient = channel_continuity_flow(std::move(profile), kInflow, h_in, {1.0, 0.0});
  return s;
}

}  // namespace wakefarm
