#pragma once

#include <functional>
#include <memory>

#include "wakefarm/layout.hpp"
#include "wakefarm/power.hpp"

namespace wakefarm {

/// The quantity the optimizers maximise. value() must be deterministic for
/// a fixed layout.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual double value(const Layout& layout) const = 0;
  virtual bool has_gradient() const { return false; }
  /// Throws std::logic_error unless has_gradient().
  virtual GradientVector gradient(const Layout& layout) const;
};

using ObjectivePtr = std::shared_ptr<const Objective>;

class PowerObjective final : public Objective {
 public:
  explicit PowerObjective(PowerFunctional functional);

  double value(const Layout& layout) const override { return functional_.value(layout); }
  bool has_gradient() const override { return true; }
  GradientVector gradient(const Layout& layout) const override { return functional_.gradient(layout); }

  const PowerFunctional& functional() const { return functional_; }

 private:
  PowerFunctional functional_;
};

/// Adapter for closed-form oracles; the gradient is optional.
class FunctionObjective final : public Objective {
 public:
  using ValueFn = std::function<double(const Layout&)>;
  using GradientFn = std::function<GradientVector(const Layout&)>;

  explicit FunctionObjective(ValueFn value, GradientFn gradient = {})
      : value_(std::move(value)), gradient_(std::move(gradient)) {}

  double value(const Layout& layout) const override { return value_(layout); }
  bool has_gradient() const override { return static_cast<bool>(gradient_); }
  GradientVector gradient(const Layout& layout) const override;

 private:
  ValueFn value_;
  GradientFn gradient_;
};

}  // namespace wakefarm
