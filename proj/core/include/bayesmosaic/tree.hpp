#pragma once

// Baseline probability tree: root -> one branch per prior event -> one
// sub-branch per outcome. Leaves are spaced evenly regardless of probability,
// root on the left.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bayesmosaic/bayes.hpp"

namespace bayesmosaic {

enum class TreeLevel { kRoot = 0, kPrior = 1, kOutcome = 2 };

struct TreeNode {
  std::size_t id = 0;
  TreeLevel level = TreeLevel::kRoot;
  std::optional<std::size_t> parent;
  std::string label;
  std::optional<std::size_t> a_index;
  std::optional<std::size_t> b_index;
  double edge_probability = 1.0;  // probability on the edge from the parent
  double path_probability = 1.0;  // product along the path from the root
  double x = 0.0;                 // abstract layout coordinates in [0, 1]
  double y = 0.0;                 // 0 at the top
};

struct TreeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  double probability = 0.0;
};

struct TreeDiagram {
  std::vector<TreeNode> nodes;  // root first, then prior nodes, then leaves in (a, b) order
  std::vector<TreeEdge> edges;
  std::size_t prior_count = 0;
  std::size_t outcome_count = 0;

  const TreeNode& root() const { return nodes.front(); }
  const TreeNode& prior_node(PriorIndex a) const;
  const TreeNode& leaf(PriorIndex a, OutcomeIndex b) const;
};

TreeDiagram build_tree(const BayesModel& model);

}  // namespace bayesmosaic
