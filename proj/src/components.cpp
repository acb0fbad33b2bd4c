#include "rz/components.hpp"

namespace rz {

ComponentGroupDescription component_group(const NewtonPolygon& np) {
  if (np.summands.empty()) throw EmptyPolygon("component_group");
  if (!is_symmetric(np)) throw NotSymmetric("polygon " + np.str());
  Parts parts = decompose_parts(np);
  if (parts.etale != parts.mult)
    throw AssertionFailure("etale height " + std::to_string(parts.etale) +
                           " != multiplicative height " +
                           std::to_string(parts.mult) + " for " + np.str());
  return ComponentGroupDescription{parts.mult, parts.mult > 0, true};
}

}  // namespace rz
