#pragma once

#include <vector>

#include "wakefarm/flowfield.hpp"
#include "wakefarm/layout.hpp"
#include "wakefarm/wake.hpp"

namespace wakefarm {

/// dJ/dm in W/m, ordered like the layout vector.
using GradientVector = std::vector<double>;

/// J(m) = alpha * sum_i |u_r(x_i, y_i)|^3 with u_r = c * u_a.
///
/// The speed at turbine i excludes turbine i's own wake. Every turbine uses
/// the same wake model, oriented along the ambient direction at the turbine.
/// Evaluation is O(N^2) and pure.
struct PowerFunctional {
  double alpha = 1.0;  // W s^3 / m^3
  FlowPtr ambient;
  WakePtr wake;
  Site site;

  void validate() const;

  double value(const Layout& layout) const;
  /// Exact derivative of value() through the product rule, the wake model's
  /// factor gradients and the ambient Jacobian. Both the receiving turbine's
  /// own motion and the motion of every wake-casting turbine are included.
  GradientVector gradient(const Layout& layout) const;

  struct ValueAndGradient {
    double value;
    GradientVector gradient;
  };
  ValueAndGradient value_and_gradient(const Layout& layout) const;
};

double evaluate_power(const PowerFunctional& f, const Layout& layout);
GradientVector evaluate_gradient(const PowerFunctional& f, const Layout& layout);

/// Integral of the product bump exp(1 - 1/(1 - (x/r)^2)) exp(1 - 1/(1 - (y/r)^2))
/// over its support [-r, r]^2, m^2.
double bump_footprint_area(double radius);

/// 1/2 * rho * K * A_t with rho = 1000 kg/m^3, K = 21 and A_t the bump
/// footprint of a rotor of radius D/2.
double default_alpha(const TurbineSpec& spec);

}  // namespace wakefarm
