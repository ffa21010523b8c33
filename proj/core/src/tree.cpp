#include "bayesmosaic/tree.hpp"

namespace bayesmosaic {

const TreeNode& TreeDiagram::prior_node(PriorIndex a) const {
  if (a.value >= prior_count) throw IndexError("tree prior index out of range");
  return nodes[1 + a.value];
}

const TreeNode& TreeDiagram::leaf(PriorIndex a, OutcomeIndex b) const {
  if (a.value >= prior_count || b.value >= outcome_count) throw IndexError("tree leaf index out of range");
  return nodes[1 + prior_count + a.value * outcome_count + b.value];
}

TreeDiagram build_tree(const BayesModel& model) {
  require_valid(model);
  const std::size_t k = model.prior_count();
  const std::size_t m = model.outcome_count();
  const double leaf_count = static_cast<double>(k * m);

  TreeDiagram tree;
  tree.prior_count = k;
  tree.outcome_count = m;
  tree.nodes.reserve(1 + k + k * m);
  tree.edges.reserve(k + k * m);

  TreeNode root;
  root.label = model.title;
  root.x = 0.0;
  root.y = 0.5;
  tree.nodes.push_back(root);

  for (std::size_t i = 0; i < k; ++i) {
    TreeNode n;
    n.id = tree.nodes.size();
    n.level = TreeLevel::kPrior;
    n.parent = 0;
    n.label = model.prior.labels[i].text;
    n.a_index = i;
    n.edge_probability = model.prior.probs[i];
    n.path_probability = model.prior.probs[i];
    n.x = 0.5;
    // Centred over its evenly spaced leaves.
    n.y = (static_cast<double>(i * m) + static_cast<double>(m) / 2.0) / leaf_count;
    tree.edges.push_back({0, n.id, n.edge_probability});
    tree.nodes.push_back(std::move(n));
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      TreeNode n;
      n.id = tree.nodes.size();
      n.level = TreeLevel::kOutcome;
      n.parent = 1 + i;
      n.label = model.conditional.outcome_labels[j].text;
      n.a_index = i;
      n.b_index = j;
      n.edge_probability = model.conditional.rows[i][j];
      n.path_probability = model.prior.probs[i] * model.conditional.rows[i][j];
      n.x = 1.0;
      n.y = (static_cast<double>(i * m + j) + 0.5) / leaf_count;
      tree.edges.push_back({1 + i, n.id, n.edge_probability});
      tree.nodes.push_back(std::move(n));
    }
  }
  return tree;
}

}  // namespace bayesmosaic
