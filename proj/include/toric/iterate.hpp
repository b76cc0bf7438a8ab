#pragma once

// Iterated (normalized) Nash blowups with cycle detection.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/iso.hpp"
#include "toric/nash.hpp"

namespace toric {

enum class BlowupMode { nash, normalized };

struct RunConfig {
  Characteristic characteristic;
  BlowupMode mode = BlowupMode::nash;
  std::size_t max_depth = 1;
  /// follow[k] selects the subset expanded at depth k; levels past the end
  /// of the list expand every chart.
  std::vector<Subset> follow;
};

enum class NodeStatus {
  smooth,    // isomorphic to N^d, not expanded
  cycle,     // isomorphic to an ancestor, not expanded
  expanded,  // children were generated
  frontier,  // depth limit reached
};

struct ParentLink {
  std::size_t node;
  Subset subset;  // first subset producing this chart
};

struct IsoLink {
  std::size_t ancestor;
  IsoWitness witness;  // ancestor -> this node
};

struct IterationNode {
  std::size_t id;
  std::string path;  // subsets from the root, e.g. "/0.1.2.4/0.1.3.5"
  std::size_t depth;
  AffineSemigroup semigroup;
  std::optional<ParentLink> parent;
  std::optional<IsoLink> iso_link;
  NodeStatus status = NodeStatus::frontier;
};

enum class IterationOutcome { cycle_found, resolved, inconclusive };

struct IterationTree {
  std::vector<IterationNode> nodes;
  std::vector<std::string> warnings;
  IterationOutcome outcome = IterationOutcome::inconclusive;
};

/// Breadth-first expansion of charts. Each new node is compared with every
/// ancestor on its path, root first; a match ends the branch, as does
/// smoothness.
IterationTree iterate(const AffineSemigroup& root, const RunConfig& cfg);

std::string to_string(NodeStatus s);
std::string to_string(IterationOutcome o);
std::string format_subset(const Subset& s);  // "{1,2,3,5}", 1-based

}  // namespace toric
