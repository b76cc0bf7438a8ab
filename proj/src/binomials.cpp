#include "toric/binomials.hpp"

#include "toric/errors.hpp"

namespace toric {

namespace {

LatticeVector combination(std::span<const LatticeVector> generators,
                          const std::vector<Integer>& exponents) {
  if (exponents.size() != generators.size())
    throw DimensionError("exponent vector has " + std::to_string(exponents.size()) +
                         " entries, expected " + std::to_string(generators.size()));
  LatticeVector sum = LatticeVector::zero(generators.empty() ? 0 : generators[0].size());
  for (std::size_t i = 0; i < generators.size(); ++i) sum += exponents[i] * generators[i];
  return sum;
}

}  // namespace

bool binomial_holds(std::span<const LatticeVector> generators, const Binomial& b) {
  return combination(generators, b.lhs) == combination(generators, b.rhs);
}

std::vector<bool> check_binomials(std::span<const LatticeVector> generators,
                                  std::span<const Binomial> binomials) {
  std::vector<bool> out;
  out.reserve(binomials.size());
  for (const auto& b : binomials) out.push_back(binomial_holds(generators, b));
  return out;
}

}  // namespace toric
