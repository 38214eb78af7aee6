#include "wakefarm/objective.hpp"

#include <stdexcept>

namespace wakefarm {

GradientVector Objective::gradient(const Layout&) const {
  throw std::logic_error("objective has no gradient capability");
}

PowerObjective::PowerObjective(PowerFunctional functional) : functional_(std::move(functional)) {
  functional_.validate();
}

GradientVector FunctionObjective::gradient(const Layout& layout) const {
  if (!gradient_) return Objective::gradient(layout);
  return gradient_(layout);
}

}  // namespace wakefarm
