#pragma once

#include <iosfwd>

#include "wakefarm/layout.hpp"
#include "wakefarm/trace.hpp"

namespace wakefarm::cli {

struct RenderInput {
  Site site;
  double turbine_radius = 10.0;
  Layout initial;
  Layout final_layout;
  ConvergenceTrace stage1;
  ConvergenceTrace stage2;
};

/// Layout panel: a nested <svg> whose viewBox is the site box, flipped so y
/// points up. Initial turbines are hollow circles, final turbines filled;
/// no other circle elements are emitted. A convergence panel with one
/// polyline per non-empty trace follows unless both traces are empty.
void render_svg(std::ostream& out, const RenderInput& in);

}  // namespace wakefarm::cli
