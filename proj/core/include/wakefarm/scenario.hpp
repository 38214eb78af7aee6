#pragma once

#include <string>
#include <vector>

#include "wakefarm/flowfield.hpp"
#include "wakefarm/layout.hpp"
#include "wakefarm/rng.hpp"

namespace wakefarm {

/// One optimisation problem: where turbines may go, the flow they sit in and
/// how the starting layout is built.
struct Scenario {
  std::string name;
  Site site;
  FlowPtr ambient;
  std::string flow_description;
  TurbineSpec turbine;
  int n_turbines = 8;
  /// The initial regular grid is laid out in this box (often the site).
  Site initial_region;

  void validate() const;

  /// Regular grid over initial_region with the rows x cols factorisation of
  /// n_turbines whose aspect ratio is closest to the region's.
  Layout initial_layout() const;

  /// initial_layout() followed by seeded_layouts over the whole site.
  std::vector<Layout> global_seeds(RngSeed seed, int n_random) const;
};

/// Names accepted by make_scenario.
std::vector<std::string> scenario_names();

/// Presets:
///   channel-1      uniform 2 m/s along x
///   headland-3     gridded flow around a headland on the lower bank
///   island-4       gridded flow squeezed under an island on the upper bank
///   bathymetry-1   channel over a linear ramp (25 m to 30 m) then shallows
///   bathymetry-2   channel over seeded random bumps
///   bathymetry-3   headland flow modulated by seeded random bumps
///   double-basin   make_double_basin_scenario(2.5, 1.5, 1.0)
/// Throws std::invalid_argument for an unknown name or n_turbines < 1.
Scenario make_scenario(const std::string& name, int n_turbines);

/// Channel whose speed is slow_speed for x <= 100, dips to barrier_speed at
/// x = 150 and rises to fast_speed for x >= 200, on a 320 m x 160 m site.
/// The initial grid fills the slow plateau. Requires
/// fast_speed >= slow_speed >= barrier_speed > 0.
Scenario make_double_basin_scenario(double fast_speed, double slow_speed, double barrier_speed,
                                    int n_turbines = 2);

}  // namespace wakefarm
