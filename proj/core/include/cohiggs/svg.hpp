#pragma once

#include <string>

#include "cohiggs/polytope.hpp"
#include "cohiggs/prehiggs.hpp"

namespace cohiggs {

/// Lattice grid, hull outline and per-point dimension labels of a surface
/// range. Byte-deterministic for fixed input.
std::string rangeSvg(const HiggsRange& range);

/// Grid plus the polytope outline and its lattice points.
std::string polytopeSvg(const LatticePolytope& p);

}  // namespace cohiggs
