#pragma once

// Affine semigroups S in M = Z^d and their Hilbert bases.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Canonical order: ascending value of `grading`, ties broken lexicographically.
void sort_canonical(std::vector<LatticeVector>& v, const LatticeVector& grading);

/// Minimal generating set of a pointed affine semigroup, in canonical order.
class HilbertBasis {
 public:
  HilbertBasis() = default;
  HilbertBasis(std::vector<LatticeVector> elements, const LatticeVector& grading);

  std::size_t size() const { return elements_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<LatticeVector>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::optional<std::size_t> index_of(const LatticeVector& v) const;
  bool contains(const LatticeVector& v) const { return index_of(v).has_value(); }

  /// Set equality, ignoring order.
  bool same_elements(std::span<const LatticeVector> other) const;

 private:
  std::vector<LatticeVector> elements_;
};

/// Multiplicity of each generator in a decomposition v = sum m_i g_i.
using MembershipCertificate = std::vector<Integer>;

class AffineSemigroup {
 public:
  /// Throws StructureError when the generators do not have rank d.
  AffineSemigroup(std::size_t ambient_rank, std::vector<LatticeVector> generators);
  explicit AffineSemigroup(const IntMatrix& column_generators);

  /// Semigroup whose generators are already its Hilbert basis.
  static AffineSemigroup with_hilbert_basis(std::size_t ambient_rank, HilbertBasis basis,
                                            std::optional<bool> saturated = std::nullopt);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<LatticeVector>& generators() const { return generators_; }
  const Cone& cone() const { return cone_; }

  bool is_pointed() const;
  /// The group generated is all of Z^d.
  bool generates_lattice() const;
  /// S == Cone(S) ∩ Z^d.
  bool is_saturated() const;

  /// Canonical grading; requires pointedness.
  const LatticeVector& grading() const;

  /// Minimal generators, computed on first use.
  const HilbertBasis& hilbert_basis() const;

  /// Generators of the semigroup with their multiplicities solved by a
  /// bounded search. Requires pointedness.
  std::optional<MembershipCertificate> member(const LatticeVector& v) const;

 private:
  struct Cache;

  std::size_t ambient_rank_;
  std::vector<LatticeVector> generators_;
  Cone cone_;
  std::shared_ptr<Cache> cache_;
};

/// Hilbert basis of c ∩ Z^d: rays of a triangulation plus the lattice points
/// of each fundamental parallelepiped, reduced to the irreducible elements.
HilbertBasis hilbert_basis_saturated(const Cone& c);

/// The |det| lattice points of {sum l_i r_i : 0 <= l_i < 1}, sorted
/// lexicographically.
std::vector<LatticeVector> parallelepiped_points(const SimplicialCone& s);

std::optional<MembershipCertificate> member(const AffineSemigroup& s, const LatticeVector& v);

HilbertBasis minimal_generators(const AffineSemigroup& s);

/// Cone(s) ∩ Z^d with its Hilbert basis attached.
AffineSemigroup saturate(const AffineSemigroup& s);

/// S × N^r inside Z^(d+r).
AffineSemigroup product_with_free(const AffineSemigroup& s, std::size_t r);

/// Extends each vector by r zero coordinates.
LatticeVector embed(const LatticeVector& v, std::size_t r);

}  // namespace toric
