#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric::detail {

/// V-description of a polyhedral cone: cone(rays) + span(lines).
/// Lines form the HNF basis of the lineality lattice; rays are primitive,
/// orthogonal to every line and sorted lexicographically.
struct GeneratorDescription {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lines;
};

/// Generators of {y : <a, y> >= 0 for a in inequalities, <e, y> == 0 for e in
/// equations}, computed by the double description method with exact
/// arithmetic. Adjacency of rays is decided by the algebraic rank test.
GeneratorDescription double_description(std::span<const LatticeVector> inequalities,
                                        std::span<const LatticeVector> equations,
                                        std::size_t dim);

}  // namespace toric::detail
