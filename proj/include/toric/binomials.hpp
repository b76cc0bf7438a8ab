#pragma once

// Binomial relations x^u - x^w of a toric ideal, checked as lattice relations
// among the generators h_i that the variables x_i map to.

#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

struct Binomial {
  std::vector<Integer> lhs;  // exponent vector u
  std::vector<Integer> rhs;  // exponent vector w
};

/// sum u_i h_i == sum w_i h_i. Throws DimensionError when an exponent vector
/// does not have one entry per generator.
bool binomial_holds(std::span<const LatticeVector> generators, const Binomial& b);

std::vector<bool> check_binomials(std::span<const LatticeVector> generators,
                                  std::span<const Binomial> binomials);

}  // namespace toric
