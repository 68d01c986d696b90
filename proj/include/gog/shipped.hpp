#pragma once

#include <string>
#include <vector>

#include "gog/spec_io.hpp"

namespace gog {

struct ShippedSpec {
  std::string name;
  SpecFile file;
};

// Built-in example specs, used by tests and mirrored by the files under
// specs/. Each carries a verified concrete model when one exists.
const std::vector<ShippedSpec>& shipped_specs();
const ShippedSpec& shipped(const std::string& name);

// Individual builders.
SpecFile circle_spec();        // two vertices, two parallel edges, all trivial
SpecFile theta_spec();         // two vertices, three parallel edges, all trivial
SpecFile dinfty_wedge_spec();  // wedge [Z/2, Z/2], affine model
SpecFile psl2z_wedge_spec();   // wedge [Z/2, Z/3], projective matrix model
SpecFile sl2z_amalgam_spec();  // Z/4 *_{Z/2} Z/6, matrix model
SpecFile z3_hnn_spec();        // HNN of Z/3 twisted by inversion, semidirect model

}  // namespace gog
