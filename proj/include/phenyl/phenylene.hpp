#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "phenyl/squeeze.hpp"

namespace phenyl {

/// Direction class of the square edges that join two hexagons.
inline constexpr int kConnectingClass = 4;

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeRecord {
  EdgeId id = 0;
  VertexId u = 0;  // u < v
  VertexId v = 0;
  std::int32_t direction_class = 0;  // 1..3 hexagon side, 4 square connector
  std::int32_t hexagon = -1;         // owning hexagon for classes 1..3
  std::int32_t square = -1;          // owning square (inner-dual edge index) for class 4
};

struct Incidence {
  VertexId vertex;
  EdgeId edge;
};

/// Phenylene graph: every hexagon gets six private vertices, and each
/// inner-dual edge becomes a square made of the two copies of the shared
/// squeeze side plus two connecting edges.
///
/// Vertex 6h+c is corner c of hexagon h. Edge 6h+c is side c of hexagon h
/// (corners c and c+1); square s contributes edges 6n+2s and 6n+2s+1.
struct Phenylene {
  std::size_t vertex_count = 0;
  std::vector<EdgeRecord> edges;
  std::vector<std::vector<Incidence>> adjacency;
  std::vector<std::array<std::size_t, 6>> hexagon_faces;  // cyclic vertex order
  std::vector<std::array<std::size_t, 4>> square_faces;
  std::vector<std::array<std::size_t, 6>> hexagon_face_edges;  // edge i joins face vertices i, i+1
  std::vector<std::array<std::size_t, 4>> square_face_edges;
  // Faces on each edge: hexagon h is face h, square s is face n+s; -1 marks
  // the outer face.
  std::vector<std::array<int, 2>> edge_faces;
  std::shared_ptr<const Squeeze> squeeze;

  std::size_t edge_count() const { return edges.size(); }
  std::size_t hexagon_count() const { return hexagon_faces.size(); }
};

Phenylene build_phenylene(const Squeeze& squeeze);

/// All-pairs BFS distances, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, -1) {}
  int operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
  int& at(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Phenylene& g);

/// `u v class` per line, edges in id order.
std::string export_edge_list(const Phenylene& g);

}  // namespace phenyl
