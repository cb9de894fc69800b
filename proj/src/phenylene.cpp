#include "phenyl/phenylene.hpp"

#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace phenyl {

namespace {

void add_edge(Phenylene& g, std::size_t a, std::size_t b, int cls, int hexagon, int square) {
  EdgeRecord e;
  e.id = static_cast<EdgeId>(g.edges.size());
  e.u = static_cast<VertexId>(std::min(a, b));
  e.v = static_cast<VertexId>(std::max(a, b));
  e.direction_class = cls;
  e.hexagon = hexagon;
  e.square = square;
  g.adjacency[a].push_back({static_cast<VertexId>(b), e.id});
  g.adjacency[b].push_back({static_cast<VertexId>(a), e.id});
  g.edges.push_back(e);
}

}  // namespace

Phenylene build_phenylene(const Squeeze& squeeze) {
  const std::size_t n = squeeze.hexagon_count();
  if (6 * n > std::numeric_limits<VertexId>::max() / 2) throw std::length_error("phenylene too large");
  Phenylene g;
  g.vertex_count = 6 * n;
  g.adjacency.resize(g.vertex_count);
  g.edges.reserve(8 * n);
  g.squeeze = std::make_shared<const Squeeze>(squeeze);

  auto corner = [](std::size_t h, int c) { return 6 * h + static_cast<std::size_t>((c % 6 + 6) % 6); };

  for (std::size_t h = 0; h < n; ++h) {
    std::array<std::size_t, 6> face{};
    std::array<std::size_t, 6> face_edges{};
    for (int c = 0; c < 6; ++c) {
      face[static_cast<std::size_t>(c)] = corner(h, c);
      face_edges[static_cast<std::size_t>(c)] = g.edges.size();
      add_edge(g, corner(h, c), corner(h, c + 1), side_class(c), static_cast<int>(h), -1);
    }
    g.hexagon_faces.push_back(face);
    g.hexagon_face_edges.push_back(face_edges);
  }

  // Parent side d (corners d, d+1) faces child side d+3 (corners d+3, d+4);
  // corner d of the parent is the same lattice point as corner d+4 of the child.
  for (std::size_t s = 0; s < squeeze.inner_dual.size(); ++s) {
    const DualEdge& de = squeeze.inner_dual[s];
    const auto p = static_cast<std::size_t>(de.parent);
    const auto c = static_cast<std::size_t>(de.child);
    const int d = de.direction;
    const std::size_t first = g.edges.size();
    add_edge(g, corner(p, d), corner(c, d + 4), kConnectingClass, -1, static_cast<int>(s));
    add_edge(g, corner(p, d + 1), corner(c, d + 3), kConnectingClass, -1, static_cast<int>(s));
    g.square_faces.push_back({corner(p, d), corner(p, d + 1), corner(c, d + 3), corner(c, d + 4)});
    g.square_face_edges.push_back({6 * p + static_cast<std::size_t>(d), first + 1,
                                   6 * c + static_cast<std::size_t>((d + 3) % 6), first});
  }

  g.edge_faces.assign(g.edges.size(), {-1, -1});
  auto attach_face = [&](std::size_t edge, int face) {
    auto& slots = g.edge_faces[edge];
    (slots[0] < 0 ? slots[0] : slots[1]) = face;
  };
  for (std::size_t h = 0; h < n; ++h)
    for (const std::size_t e : g.hexagon_face_edges[h]) attach_face(e, static_cast<int>(h));
  for (std::size_t s = 0; s < g.square_face_edges.size(); ++s)
    for (const std::size_t e : g.square_face_edges[s]) attach_face(e, static_cast<int>(n + s));

  if (g.edges.size() != 8 * n - 2) throw std::logic_error("phenylene edge count is not 8n-2");
  for (const auto& nbrs : g.adjacency)
    if (nbrs.size() < 2 || nbrs.size() > 3) throw std::logic_error("phenylene vertex degree outside 2..3");
  return g;
}

DistanceMatrix distance_matrix(const Phenylene& g) {
  const std::size_t n = g.vertex_count;
  DistanceMatrix dm(n);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    dm.at(s, s) = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& inc : g.adjacency[u]) {
        if (dm(s, inc.vertex) >= 0) continue;
        dm.at(s, inc.vertex) = dm(s, u) + 1;
        queue.push_back(inc.vertex);
      }
    }
  }
  return dm;
}

std::string export_edge_list(const Phenylene& g) {
  std::ostringstream out;
  for (const auto& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.direction_class << '\n';
  return out.str();
}

}  // namespace phenyl
