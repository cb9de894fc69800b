#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "phenyl/checked.hpp"
#include "phenyl/phenylene.hpp"

namespace phenyl {

class QuotientNotTree : public std::runtime_error {
 public:
  explicit QuotientNotTree(const std::string& what) : std::runtime_error(what) {}
};

/// A weighted tree edge. Rooting the tree at node 0, `upper` is the end
/// nearer the root. Side 1 is the component of T - e holding `upper`, side 2
/// the subtree under `lower`; n_* sum node weights and m_* sum the weights of
/// the other tree edges on each side.
struct TreeLink {
  std::size_t a = 0;  // a < b
  std::size_t b = 0;
  Int weight = 0;
  std::size_t upper = 0;
  std::size_t lower = 0;
  Int n1 = 0;
  Int n2 = 0;
  Int m1 = 0;
  Int m2 = 0;
};

/// Where a G-edge lands in a quotient tree: inside a node or on a link.
struct TreeImage {
  std::uint32_t index = 0;
  bool on_link = false;
};

class QuotientTree {
 public:
  struct WeightedEdge {
    std::size_t a;
    std::size_t b;
    Int weight;
  };

  /// Builds from explicit weights. Throws QuotientNotTree unless the links
  /// form a spanning tree on the nodes.
  static QuotientTree from_weights(std::vector<Int> node_weights, const std::vector<WeightedEdge>& links);

  const std::vector<Int>& node_weights() const { return node_weight_; }
  const std::vector<TreeLink>& links() const { return links_; }
  std::size_t node_count() const { return node_weight_.size(); }
  Int total_node_weight() const { return total_node_; }
  Int total_link_weight() const { return total_link_; }

  /// True when `node` lies in the subtree under `link.lower` (side 2).
  bool on_lower_side(const TreeLink& link, std::size_t node) const {
    return enter_[link.lower] <= enter_[node] && enter_[node] < leave_[link.lower];
  }

  /// Filled only for trees built from a phenylene.
  const std::vector<std::uint32_t>& component_of_vertex() const { return component_; }
  const std::vector<TreeImage>& edge_images() const { return images_; }

 private:
  friend QuotientTree quotient_tree(const Phenylene& g, int direction_class);

  std::vector<Int> node_weight_;
  std::vector<TreeLink> links_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> leave_;
  Int total_node_ = 0;
  Int total_link_ = 0;
  std::vector<std::uint32_t> component_;
  std::vector<TreeImage> images_;
};

/// Quotient tree T_i for the edge set of direction class i (1..4). Nodes are
/// the components of G - E_i numbered by smallest vertex id; node weight is
/// the number of G-edges inside the component, link weight the number of
/// E_i edges between its two components.
QuotientTree quotient_tree(const Phenylene& g, int direction_class);

/// W(T, w) = sum over links of n1 * n2.
Int tree_wiener_v(const QuotientTree& t);
/// hat-W_e(T, w') = sum over links of m1 * m2.
Int tree_wiener_e_hat(const QuotientTree& t);
/// W_ve(T, w, w') = sum over links of n1 * m2 + n2 * m1.
Int tree_wiener_ve(const QuotientTree& t);

}  // namespace phenyl
