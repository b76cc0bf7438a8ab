#pragma once

// JSON documents accepted by the command line tool.
//
//   semigroup: { "rank": d, "generators": [[int, ...], ...],
//                "pointed": "required" | "check" | "skip",
//                "semigroup": "cone" | "generated" }
//   relations: { "pairs": [[[u...], [w...]], ...] }
//
// "semigroup" is optional. With "cone" (the default) the document describes
// S = Cone(generators) ∩ Z^d; with "generated" S is the semigroup spanned by
// the generators themselves.

#include <filesystem>
#include <string>
#include <vector>

#include "toric/binomials.hpp"
#include "toric/semigroup.hpp"

namespace toric::cli {

enum class PointedPolicy { required, check, skip };

struct SemigroupInput {
  std::vector<LatticeVector> generators;  // as listed in the document
  PointedPolicy pointed = PointedPolicy::required;
  bool saturated = true;
  AffineSemigroup semigroup;
};

/// Throws InputError with a description of the first violation.
SemigroupInput parse_input(const std::string& document);
SemigroupInput read_input(const std::filesystem::path& file);

/// Each exponent vector must have `variables` entries.
std::vector<Binomial> parse_relations(const std::string& document, std::size_t variables);
std::vector<Binomial> read_relations(const std::filesystem::path& file, std::size_t variables);

/// "1,2,3,5;1,2,4,6" -> {{0,1,2,4}, {0,1,3,5}}: 1-based indices into the
/// canonical Hilbert basis, one group per depth.
std::vector<std::vector<std::size_t>> parse_follow(const std::string& text);

}  // namespace toric::cli
