#pragma once

#include <string>

#include "hnc/chambers.hpp"

namespace hnc {

// Deterministic SVG of a rank-2 chamber decomposition: the cone drawn in the
// (x, y) coordinate plane, sectors filled from a fixed palette in angular
// order, wall rays as lines, regions labeled by chamber id. Boundary rays are
// placed via the affine slice x + y = 1; every coordinate is computed exactly
// and rendered to 6 decimal places (round half even) only at emission.
std::string render_chambers_svg(const Decomposition& decomposition, const AmpleCone& cone,
                                const NSLattice& lattice);

} // namespace hnc
