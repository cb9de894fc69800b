#include "phenyl/cuts.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "phenyl/union_find.hpp"

namespace phenyl {

ThetaPartition theta_partition(const Phenylene& g) {
  const std::size_t m = g.edge_count();
  UnionFind uf(m);
  for (const auto& face : g.hexagon_face_edges)
    for (std::size_t i = 0; i < 3; ++i) uf.unite(face[i], face[i + 3]);
  for (const auto& face : g.square_face_edges) {
    uf.unite(face[0], face[2]);
    uf.unite(face[1], face[3]);
  }

  ThetaPartition part;
  part.class_of_edge.assign(m, 0);
  std::vector<std::size_t> class_of_root(m, m);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t root = uf.find(e);
    if (class_of_root[root] == m) {
      class_of_root[root] = part.classes.size();
      part.classes.emplace_back();
    }
    part.class_of_edge[e] = class_of_root[root];
    part.classes[class_of_root[root]].push_back(e);
  }
  return part;
}

ThetaClass make_theta_class(const Phenylene& g, std::size_t id, std::vector<std::size_t> cut) {
  constexpr std::uint8_t kUnset = 0xff;
  ThetaClass tc;
  tc.id = id;
  tc.edge_ids = std::move(cut);
  std::sort(tc.edge_ids.begin(), tc.edge_ids.end());
  tc.side_of_edge.assign(g.edge_count(), EdgeSide::Zero);
  for (const std::size_t e : tc.edge_ids) tc.side_of_edge[e] = EdgeSide::Cut;

  tc.side_of_vertex.assign(g.vertex_count, kUnset);
  std::vector<std::size_t> stack;
  std::uint8_t label = 0;
  for (std::size_t start = 0; start < g.vertex_count; ++start) {
    if (tc.side_of_vertex[start] != kUnset) continue;
    if (label > 1) throw std::logic_error("removing a Theta-class left more than two components");
    tc.side_of_vertex[start] = label;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.adjacency[u]) {
        if (tc.side_of_edge[inc.edge] == EdgeSide::Cut || tc.side_of_vertex[inc.vertex] != kUnset) continue;
        tc.side_of_vertex[inc.vertex] = label;
        stack.push_back(inc.vertex);
      }
    }
    ++label;
  }
  if (label != 2) throw std::logic_error("removing a Theta-class did not disconnect the graph");

  for (const auto& e : g.edges) {
    if (tc.side_of_edge[e.id] == EdgeSide::Cut) {
      if (tc.side_of_vertex[e.u] == tc.side_of_vertex[e.v])
        throw std::logic_error("cut edge with both ends on one side");
      continue;
    }
    tc.side_of_edge[e.id] = tc.side_of_vertex[e.u] == 0 ? EdgeSide::Zero : EdgeSide::One;
  }
  return tc;
}

std::vector<ThetaClass> theta_classes(const Phenylene& g) {
  ThetaPartition part = theta_partition(g);
  std::vector<ThetaClass> out;
  out.reserve(part.classes.size());
  for (std::size_t i = 0; i < part.classes.size(); ++i)
    out.push_back(make_theta_class(g, i, std::move(part.classes[i])));
  return out;
}

std::array<std::vector<std::size_t>, 4> direction_partition(const Phenylene& g) {
  std::array<std::vector<std::size_t>, 4> parts;
  for (const auto& e : g.edges) parts[static_cast<std::size_t>(e.direction_class - 1)].push_back(e.id);
  return parts;
}

bool cuts_intersect(const Phenylene& g, const ThetaClass& a, const ThetaClass& b) {
  std::vector<int> faces;
  for (const std::size_t e : a.edge_ids)
    for (const int f : g.edge_faces[e])
      if (f >= 0) faces.push_back(f);
  std::sort(faces.begin(), faces.end());
  for (const std::size_t e : b.edge_ids)
    for (const int f : g.edge_faces[e])
      if (f >= 0 && std::binary_search(faces.begin(), faces.end(), f)) return true;
  return false;
}

}  // namespace phenyl
