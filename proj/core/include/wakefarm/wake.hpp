#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>

#include "wakefarm/flowfield.hpp"
#include "wakefarm/geometry.hpp"
#include "wakefarm/layout.hpp"

namespace wakefarm {

/// Query offset relative to a turbine, in the frame whose x-axis is the flow
/// direction at that turbine.
struct LocalFrame {
  double downstream = 0.0;  // x0, m
  double cross = 0.0;       // y0, m
};

/// x0 = d.f, y0 = d.perp(f) with d = query - turbine. `flow_dir` must be a
/// unit vector (within 1e-9); zero or non-unit directions throw.
LocalFrame to_local_frame(Vec2 turbine, Vec2 query, Vec2 flow_dir);

/// Scalar reduction-factor field around one turbine.
class WakeModel {
 public:
  virtual ~WakeModel() = default;
  virtual double factor(LocalFrame frame) const = 0;
  /// (dr/dx0, dr/dy0), 1/m.
  virtual Vec2 gradient(LocalFrame frame) const = 0;
};

using WakePtr = std::shared_ptr<const WakeModel>;

/// Top-hat velocity deficit in a linearly expanding cone.
class JensenWake final : public WakeModel {
 public:
  explicit JensenWake(TurbineSpec spec, double decay = 0.05);

  double factor(LocalFrame frame) const override;
  /// Zero outside the cone and across it; only d/dx0 is non-zero inside.
  Vec2 gradient(LocalFrame frame) const override;

  const TurbineSpec& spec() const { return spec_; }
  double decay() const { return decay_; }

 private:
  TurbineSpec spec_;
  double decay_;
};

/// Combined factor c = prod_i r_i at `query`. Each r_i is evaluated in the
/// frame of turbine i aligned with the ambient direction there. Turbines whose
/// position equals `query` exactly are skipped. `models` holds one model per
/// turbine. Throws if a contributing turbine sits in zero ambient flow.
double combined_factor(std::span<const WakeModel* const> models, const Layout& layout, Vec2 query,
                       const AmbientFlowField& ambient);

/// u_r = c * u_a at `query`.
Vec2 reduced_velocity(std::span<const WakeModel* const> models, const Layout& layout, Vec2 query,
                      const AmbientFlowField& ambient);

/// Unit flow direction at p; throws std::domain_error for zero ambient speed.
Vec2 flow_direction(const AmbientFlowField& ambient, Vec2 p);

}  // namespace wakefarm
