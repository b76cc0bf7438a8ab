#pragma once

// Embedded data for the three four-dimensional toric counterexamples and an
// end-to-end check that recomputes every stated fact about them.
//
// Labels are 1-based positions in the listed Hilbert bases, so h_3 is
// hilbert_basis[2]; the library itself works in canonical order and the
// checks translate between the two.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toric/binomials.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// h_plus - h_minus; minus == 0 stands for the plain element h_plus.
struct LabeledDifference {
  std::size_t plus;
  std::size_t minus = 0;
};

/// G_A(h_pivot) = {h_g - h_pivot : g in others}.
struct GammaExpectation {
  std::size_t pivot;
  std::vector<std::size_t> others;
};

/// det(h_c1 h_c2 h_c3 h_c4) in this column order.
struct DeterminantEntry {
  std::array<std::size_t, 4> columns;
  int value;
};

struct WitnessImage {
  std::size_t source;
  LabeledDifference image;
};

/// Characteristic zero (and every p other than 2 and 3).
struct ZeroCharacteristicExample {
  IntMatrix rays;
  std::vector<LatticeVector> hilbert_basis;
  std::array<std::size_t, 4> subset;
  std::vector<DeterminantEntry> determinant_table;
  std::vector<GammaExpectation> gamma;
  std::vector<LabeledDifference> generating_set;
  IntMatrix witness;
  std::vector<WitnessImage> witness_images;
  std::vector<Binomial> binomials;
  Binomial negative_binomial;
  /// Placing order reproducing the four-cone subdivision through Cone(h1, h2),
  /// its index multiset and the parallelepiped of the index-2 cone.
  std::vector<std::size_t> subdivision_order;
  std::array<std::size_t, 4> index_two_cone;
};

struct CharacteristicTwoExample {
  IntMatrix rays;
  std::vector<LatticeVector> hilbert_basis;
  std::array<std::size_t, 4> subset;
  int subset_det_mod_p;
  std::vector<GammaExpectation> gamma;
  std::vector<LatticeVector> generating_set;
  LatticeVector saturation_element;
  IntMatrix witness;
};

struct CharacteristicThreeExample {
  IntMatrix rays;
  std::vector<LatticeVector> hilbert_basis;
  std::array<std::size_t, 4> subset;
  int subset_det_mod_p;
  IntMatrix first_rays;
  std::vector<LatticeVector> first_hilbert_basis;
  std::array<std::size_t, 4> second_subset;  // labels into first_hilbert_basis
  int second_subset_det_mod_p;
  IntMatrix second_rays;
  IntMatrix witness;
};

struct ReferenceData {
  ZeroCharacteristicExample zero;
  CharacteristicTwoExample two;
  CharacteristicThreeExample three;
};

ReferenceData reference_data();

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> items;
  bool all_passed() const;
};

/// Runs every check; `primes` selects the characteristics compared against
/// characteristic zero on the first example.
VerificationReport verify_counterexamples(const ReferenceData& data,
                                          std::span<const std::uint64_t> primes);

}  // namespace toric
