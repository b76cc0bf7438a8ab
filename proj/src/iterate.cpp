#include "toric/iterate.hpp"

#include <algorithm>
#include <deque>

#include "toric/errors.hpp"

namespace toric {

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::smooth: return "smooth";
    case NodeStatus::cycle: return "cycle";
    case NodeStatus::expanded: return "expanded";
    case NodeStatus::frontier: return "frontier";
  }
  return "unknown";
}

std::string to_string(IterationOutcome o) {
  switch (o) {
    case IterationOutcome::cycle_found: return "cycle-found";
    case IterationOutcome::resolved: return "resolved";
    case IterationOutcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string format_subset(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

namespace {

struct Child {
  Subset subset;
  AffineSemigroup semigroup;
};

std::vector<Child> expand(const AffineSemigroup& s, const RunConfig& cfg, std::size_t depth,
                          std::vector<std::string>& warnings) {
  std::vector<Child> out;
  const Characteristic p = cfg.characteristic;
  if (depth < cfg.follow.size()) {
    const Subset& a = cfg.follow[depth];
    const HilbertBasis& basis = s.hilbert_basis();
    bool in_range = a.size() == s.ambient_rank() &&
                    std::all_of(a.begin(), a.end(), [&](std::size_t i) { return i < basis.size(); });
    if (!in_range || det_p(subset_matrix(basis, a), p) == 0) {
      warnings.push_back("depth " + std::to_string(depth) + ": subset " + format_subset(a) +
                         " is not a valid subset of the Hilbert basis");
      return out;
    }
    ChartSpec chart = make_chart(s, a, p);
    if (!chart.pointed) {
      warnings.push_back("depth " + std::to_string(depth) + ": chart for " + format_subset(a) +
                         " is not pointed");
      return out;
    }
    if (cfg.mode == BlowupMode::nash)
      out.push_back({a, chart.chart_semigroup});
    else
      out.push_back({a, saturate(chart.chart_semigroup)});
    return out;
  }
  if (cfg.mode == BlowupMode::nash) {
    for (auto& chart : nash_charts(s, p)) out.push_back({chart.subset, chart.chart_semigroup});
  } else {
    for (auto& chart : normalized_nash_charts(s, p))
      out.push_back({chart.subsets.front(), chart.semigroup});
  }
  return out;
}

}  // namespace

IterationTree iterate(const AffineSemigroup& root, const RunConfig& cfg) {
  if (!root.is_pointed()) throw StructureError("root semigroup is not pointed");
  if (!root.generates_lattice()) throw StructureError("generators do not span the lattice");
  if (cfg.max_depth == 0) throw ArgumentError("max depth must be positive");

  IterationTree tree;
  if (cfg.mode == BlowupMode::nash && !cfg.characteristic.is_zero())
    tree.warnings.push_back("Nash mode in positive characteristic; the known counterexamples "
                            "concern the normalized Nash blowup");

  tree.nodes.push_back(IterationNode{0, "", 0, root, std::nullopt, std::nullopt,
                                     NodeStatus::frontier});
  if (is_smooth(root)) tree.nodes[0].status = NodeStatus::smooth;

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (tree.nodes[id].status == NodeStatus::smooth || tree.nodes[id].status == NodeStatus::cycle)
      continue;
    const std::size_t depth = tree.nodes[id].depth;
    if (depth >= cfg.max_depth) continue;

    auto children = expand(tree.nodes[id].semigroup, cfg, depth, tree.warnings);
    if (children.empty()) continue;
    tree.nodes[id].status = NodeStatus::expanded;

    std::vector<std::size_t> ancestors;
    for (std::optional<std::size_t> a = id; a; ) {
      ancestors.push_back(*a);
      const auto& parent = tree.nodes[*a].parent;
      a = parent ? std::optional<std::size_t>(parent->node) : std::nullopt;
    }
    std::reverse(ancestors.begin(), ancestors.end());

    for (auto& child : children) {
      IterationNode node{tree.nodes.size(),
                         tree.nodes[id].path + "/" + format_subset(child.subset),
                         depth + 1,
                         std::move(child.semigroup),
                         ParentLink{id, child.subset},
                         std::nullopt,
                         NodeStatus::frontier};
      if (is_smooth(node.semigroup)) {
        node.status = NodeStatus::smooth;
      } else {
        for (auto a : ancestors) {
          if (auto w = find_iso(tree.nodes[a].semigroup, node.semigroup)) {
            node.iso_link = IsoLink{a, std::move(*w)};
            node.status = NodeStatus::cycle;
            break;
          }
        }
      }
      queue.push_back(node.id);
      tree.nodes.push_back(std::move(node));
    }
  }

  bool any_cycle = false, any_open = false;
  for (const auto& n : tree.nodes) {
    any_cycle |= n.status == NodeStatus::cycle;
    any_open |= n.status == NodeStatus::frontier;
  }
  tree.outcome = any_cycle  ? IterationOutcome::cycle_found
                 : any_open ? IterationOutcome::inconclusive
                            : IterationOutcome::resolved;
  return tree;
}

}  // namespace toric
