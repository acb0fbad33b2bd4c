#pragma once
// Component group of the reduced moduli space: a GL-coset space for the
// multiplicative part times an infinite cyclic quasi-polarization degree.

#include <string>

#include "rz/newton.hpp"

namespace rz {

struct ComponentGroupDescription {
  int mult_height = 0;        // d = height of the multiplicative part
  bool lattice_factor = false;  // GL_d(Qp)/GL_d(Zp) factor present (d > 0)
  bool z_factor = true;
  std::string str() const {
    if (!lattice_factor) return "Z";
    return "GL_" + std::to_string(mult_height) + "(Qp)/GL_" +
           std::to_string(mult_height) + "(Zp) x Z";
  }
};

// Raises EmptyPolygon / NotSymmetric.  The multiplicative and etale heights
// agree for symmetric polygons; the op asserts that.
ComponentGroupDescription component_group(const NewtonPolygon& np);

}  // namespace rz
