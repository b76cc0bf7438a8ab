#pragma once

// Unimodular isomorphism of pointed affine semigroups.

#include <optional>

#include "toric/lattice.hpp"
#include "toric/semigroup.hpp"

namespace toric {

/// Lattice automorphism carrying the source Hilbert basis onto the target
/// Hilbert basis.
struct IsoWitness {
  IntMatrix matrix;

  IsoWitness inverse() const { return {unimodular_inverse(matrix)}; }
};

/// Searches ordered d-tuples of the target basis for the image of a fixed
/// independent d-tuple of the source basis, in lexicographic index order,
/// and returns the first matrix that is integral, unimodular and a bijection
/// of the bases. Candidate images must agree in canonical degree and in
/// being extreme rays, both of which every lattice isomorphism preserves.
std::optional<IsoWitness> find_iso(const AffineSemigroup& source, const AffineSemigroup& target);

bool verify_witness(const IsoWitness& w, const AffineSemigroup& source,
                    const AffineSemigroup& target);

/// Semigroup generated by the images of the generators of s.
AffineSemigroup apply(const IsoWitness& w, const AffineSemigroup& s);

}  // namespace toric
