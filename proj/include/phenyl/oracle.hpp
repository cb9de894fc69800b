#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phenyl/checked.hpp"
#include "phenyl/phenylene.hpp"

// Brute-force reference computations. Everything here works from BFS
// distances and explicit line graphs only; nothing is shared with the cut
// method, so agreement between the two is meaningful.
namespace phenyl::oracle {

/// Simple undirected graph.
struct GenericGraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // id = position

  /// Throws std::invalid_argument on loops, repeated edges or endpoints out
  /// of range.
  static GenericGraph from_edges(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t edge_count() const { return edges.size(); }
};

GenericGraph from_phenylene(const Phenylene& g);

/// Reads `u v [class]` lines (the phenylene debug export). Blank and `#`
/// lines are skipped; the vertex count is the largest id plus one.
GenericGraph parse_edge_list(std::string_view text);

GenericGraph cycle_graph(std::size_t n);
GenericGraph path_graph(std::size_t n);
GenericGraph complete_graph(std::size_t n);

std::vector<int> bfs_distances(const GenericGraph& g, std::size_t source);

GenericGraph line_graph(const GenericGraph& g);

/// Sums of d and d^2 over ordered vertex pairs.
struct DistanceMoments {
  Int sum = 0;
  Int sum_squares = 0;
};

DistanceMoments distance_moments(const GenericGraph& g);

Int wiener_v_oracle(const GenericGraph& g);
Int edge_wiener_oracle(const GenericGraph& g);
Int edge_wiener_hat_oracle(const GenericGraph& g);
Int vertex_edge_wiener_oracle(const GenericGraph& g);
Int hyper_wiener_oracle(const GenericGraph& g);
Int edge_hyper_wiener_oracle(const GenericGraph& g);

/// Djokovic-Winkler relation: uv ~ xy iff d(u,x) + d(v,y) != d(u,y) + d(v,x).
class ThetaRelation {
 public:
  explicit ThetaRelation(std::size_t m) : m_(m), rel_(m * m, 0) {}
  bool related(std::size_t e, std::size_t f) const { return rel_[e * m_ + f] != 0; }
  void set(std::size_t e, std::size_t f) { rel_[e * m_ + f] = 1; }
  std::size_t edge_count() const { return m_; }

 private:
  std::size_t m_;
  std::vector<unsigned char> rel_;
};

ThetaRelation theta_relation_oracle(const GenericGraph& g);

/// Classes of the transitive closure of Theta, each ascending, ordered by
/// smallest member.
std::vector<std::vector<std::size_t>> theta_star_classes(const GenericGraph& g);

struct PartialCubeCheck {
  bool is_partial_cube = false;
  std::string witness;                    // empty on success
  std::vector<std::size_t> odd_cycle;     // vertices, when not bipartite
  std::array<std::size_t, 3> triple{};    // e Theta f, f Theta h, not e Theta h
  bool has_triple = false;
};

/// Bipartite and Theta transitive, and every Theta-class splits G into
/// exactly two components.
PartialCubeCheck is_partial_cube_check(const GenericGraph& g);

/// Vertex- and edge-weighted tree, for checking the closed tree formulas.
struct WeightedTree {
  std::vector<Int> node_weights;
  struct Edge {
    std::size_t a;
    std::size_t b;
    Int weight;
  };
  std::vector<Edge> edges;
};

/// 1/2 sum_x sum_y w(x) w(y) d(x, y)
Int weighted_wiener_v_oracle(const WeightedTree& t);
/// 1/2 sum_e sum_f w'(e) w'(f) hat-d(e, f)
Int weighted_edge_wiener_hat_oracle(const WeightedTree& t);
/// sum_x sum_e w(x) w'(e) hat-d(x, e)
Int weighted_vertex_edge_wiener_oracle(const WeightedTree& t);

}  // namespace phenyl::oracle
