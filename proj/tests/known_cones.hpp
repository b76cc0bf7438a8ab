#pragma once

// The three four-dimensional cones used throughout the tests, written out
// independently of the data embedded in the library.

#include <algorithm>
#include <vector>

#include "toric/semigroup.hpp"

namespace known {

using toric::IntMatrix;
using toric::LatticeVector;

// Characteristic zero: omega = Cone(columns), S = omega ∩ Z^4.
inline IntMatrix omega() {
  return {{1, 0, 0, 0, 2, 1}, {0, 1, 0, 0, 3, 3}, {0, 0, 1, 0, -2, -1}, {0, 0, 0, 1, -1, -1}};
}

// h1..h7; h1..h6 are the columns of omega().
inline std::vector<LatticeVector> omega_basis() {
  auto h = omega().columns();
  h.push_back({1, 2, -1, 0});
  return h;
}

inline IntMatrix omega_witness() {
  return {{-1, 0, -2, 1}, {0, -1, -3, 0}, {1, 0, 2, 0}, {0, 1, 2, 0}};
}

inline IntMatrix omega2() {
  return {{1, 0, 1, 0, 0}, {0, 1, 1, 0, 2}, {0, 0, 2, 0, 2}, {0, 0, 0, 1, 1}};
}

inline std::vector<LatticeVector> omega2_basis() {
  auto h = omega2().columns();
  h.push_back({1, 1, 1, 0});
  h.push_back({0, 1, 1, 1});
  return h;
}

inline IntMatrix omega2_witness() {
  return {{1, 0, 0, 0}, {0, 0, 0, 1}, {2, 0, -1, 2}, {0, 1, -1, 0}};
}

inline IntMatrix omega30() {
  return {{1, 0, 1, 0, 0}, {0, 1, 2, 0, 3}, {0, 0, 3, 0, 3}, {0, 0, 0, 1, 1}};
}

inline std::vector<LatticeVector> omega30_basis() {
  return IntMatrix{{1, 0, 1, 0, 0, 0, 1, 1, 0},
                   {0, 1, 2, 0, 3, 2, 1, 2, 1},
                   {0, 0, 3, 0, 3, 2, 1, 2, 1},
                   {0, 0, 0, 1, 1, 1, 0, 0, 1}}
      .columns();
}

inline IntMatrix omega31() {
  return {{0, 0, 0, 1, 1}, {0, 1, 2, 0, 1}, {0, 0, 3, 0, 3}, {1, 0, 0, -1, 0}};
}

inline std::vector<LatticeVector> omega31_basis() {
  return IntMatrix{{0, 0, 0, 1, 1, 0, 1},
                   {0, 1, 2, 0, 1, 1, 1},
                   {0, 0, 3, 0, 3, 1, 2},
                   {1, 0, 0, -1, 0, 0, 0}}
      .columns();
}

inline IntMatrix omega32() {
  return {{0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}, {0, 0, 3, 0, 3}, {1, 0, 0, -1, 0}};
}

inline IntMatrix omega3_witness() {
  return {{1, 1, -1, 0}, {0, 0, 0, 1}, {3, 0, -1, 3}, {0, -1, 1, 0}};
}

inline toric::AffineSemigroup saturated(const IntMatrix& rays) {
  return toric::saturate(toric::AffineSemigroup(rays));
}

/// Canonical indices (sorted) of 1-based labels into a listed basis.
inline std::vector<std::size_t> subset_of(const toric::HilbertBasis& basis,
                                          const std::vector<LatticeVector>& listed,
                                          std::initializer_list<std::size_t> labels) {
  std::vector<std::size_t> out;
  for (auto l : labels) out.push_back(*basis.index_of(listed[l - 1]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace known
