#pragma once

// Rational polyhedral cones in M_R = R^d given by integral generators.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// H-description with inner normals: v lies in the cone iff <n, v> >= 0 for
/// every inequality n and <e, v> == 0 for every equation e. The
/// inequalities are the primitive facet normals of a full-dimensional cone.
struct HalfspaceDescription {
  std::vector<LatticeVector> inequalities;
  std::vector<LatticeVector> equations;
};

class Cone {
 public:
  Cone(std::size_t ambient_rank, std::vector<LatticeVector> generators);
  explicit Cone(const IntMatrix& column_generators);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }

  /// Computed once per value and shared between copies.
  const HalfspaceDescription& halfspaces() const;

  std::size_t dimension() const;

 private:
  struct Cache;

  std::size_t ambient_rank_;
  std::vector<LatticeVector> generators_;
  std::shared_ptr<Cache> cache_;
};

/// d rays spanning a full-dimensional simplicial cone; index = |det(rays)|.
class SimplicialCone {
 public:
  explicit SimplicialCone(std::vector<LatticeVector> rays);

  const std::vector<LatticeVector>& rays() const { return rays_; }
  const Integer& index() const { return index_; }
  std::size_t ambient_rank() const { return rays_.size(); }

 private:
  std::vector<LatticeVector> rays_;
  Integer index_;
};

/// All functionals nonnegative on c, as primitive integer generators (a
/// lineality basis l contributes both l and -l).
Cone dual_cone(const Cone& c);

/// Primitive generators of the extreme rays, sorted lexicographically.
/// Throws StructureError when c contains a line.
std::vector<LatticeVector> primitive_rays(const Cone& c);

bool is_strongly_convex(const Cone& c);

bool contains(const Cone& c, const LatticeVector& v);

/// Sum of the primitive generators of the dual cone modulo its lineality
/// space. Strictly positive on c \ {0} whenever c is pointed.
LatticeVector grading_functional(const Cone& c);

/// Placing triangulation of a pointed full-dimensional cone, inserting its
/// primitive rays in lexicographic order.
std::vector<SimplicialCone> triangulate(const Cone& c);

/// Placing triangulation with an explicit insertion order. Every vector of
/// ray_order must be a ray of c, and every ray of c must appear.
std::vector<SimplicialCone> triangulate(const Cone& c, std::span<const LatticeVector> ray_order);

/// Same rational point set.
bool same_cone(const Cone& a, const Cone& b);

}  // namespace toric
