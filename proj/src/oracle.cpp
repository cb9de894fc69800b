#include "phenyl/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <stdexcept>

namespace phenyl::oracle {

namespace {

std::vector<std::vector<int>> all_distances(const GenericGraph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count);
  for (std::size_t s = 0; s < g.vertex_count; ++s) {
    d.push_back(bfs_distances(g, s));
    for (const int x : d.back())
      if (x < 0) throw std::invalid_argument("oracle requires a connected graph");
  }
  return d;
}

std::vector<std::vector<int>> tree_distances(const WeightedTree& t) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : t.edges) edges.emplace_back(e.a, e.b);
  return all_distances(GenericGraph::from_edges(t.node_weights.size(), std::move(edges)));
}

Int quarter(Int value, const char* what) {
  if (value % 4 != 0) throw std::logic_error(std::string(what) + ": distance sums not divisible by 4");
  return value / 4;
}

}  // namespace

GenericGraph GenericGraph::from_edges(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  GenericGraph g;
  g.vertex_count = vertex_count;
  g.adjacency.resize(vertex_count);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) throw std::invalid_argument("repeated edge");
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  g.edges = std::move(edges);
  return g;
}

GenericGraph from_phenylene(const Phenylene& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
  return GenericGraph::from_edges(g.vertex_count, std::move(edges));
}

GenericGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t vertex_count = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    std::vector<std::size_t> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size() || line[i] == '#') break;
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc{}) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected integer");
      i = static_cast<std::size_t>(ptr - line.data());
      fields.push_back(value);
    }
    if (fields.empty()) continue;
    if (fields.size() < 2 || fields.size() > 3)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'u v [class]'");
    edges.emplace_back(fields[0], fields[1]);
    vertex_count = std::max({vertex_count, fields[0] + 1, fields[1] + 1});
  }
  return GenericGraph::from_edges(vertex_count, std::move(edges));
}

GenericGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return GenericGraph::from_edges(n, std::move(edges));
}

GenericGraph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return GenericGraph::from_edges(n, std::move(edges));
}

GenericGraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return GenericGraph::from_edges(n, std::move(edges));
}

std::vector<int> bfs_distances(const GenericGraph& g, std::size_t source) {
  std::vector<int> dist(g.vertex_count, -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const std::size_t v : g.adjacency[u]) {
      if (dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

GenericGraph line_graph(const GenericGraph& g) {
  std::vector<std::vector<std::size_t>> incident(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(e);
    incident[g.edges[e].second].push_back(e);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& inc : incident)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
  return GenericGraph::from_edges(g.edges.size(), std::move(edges));
}

DistanceMoments distance_moments(const GenericGraph& g) {
  DistanceMoments dm;
  for (std::size_t s = 0; s < g.vertex_count; ++s) {
    for (const int x : bfs_distances(g, s)) {
      if (x < 0) throw std::invalid_argument("oracle requires a connected graph");
      dm.sum = checked::add(dm.sum, x, "distance sum");
      dm.sum_squares = checked::add(dm.sum_squares, checked::mul(x, x), "distance square sum");
    }
  }
  return dm;
}

Int wiener_v_oracle(const GenericGraph& g) { return distance_moments(g).sum / 2; }

Int edge_wiener_oracle(const GenericGraph& g) { return wiener_v_oracle(line_graph(g)); }

Int edge_wiener_hat_oracle(const GenericGraph& g) {
  const auto d = all_distances(g);
  Int sum = 0;
  for (const auto& [a, b] : g.edges)
    for (const auto& [x, y] : g.edges)
      sum = checked::add(sum, std::min({d[a][x], d[a][y], d[b][x], d[b][y]}), "hat W_e oracle");
  return sum / 2;
}

Int vertex_edge_wiener_oracle(const GenericGraph& g) {
  const auto d = all_distances(g);
  Int sum = 0;
  for (std::size_t x = 0; x < g.vertex_count; ++x)
    for (const auto& [a, b] : g.edges) sum = checked::add(sum, std::min(d[x][a], d[x][b]), "W_ve oracle");
  return sum;
}

Int hyper_wiener_oracle(const GenericGraph& g) {
  const DistanceMoments dm = distance_moments(g);
  return quarter(checked::add(dm.sum, dm.sum_squares), "WW oracle");
}

Int edge_hyper_wiener_oracle(const GenericGraph& g) { return hyper_wiener_oracle(line_graph(g)); }

ThetaRelation theta_relation_oracle(const GenericGraph& g) {
  const auto d = all_distances(g);
  const std::size_t m = g.edge_count();
  ThetaRelation rel(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto [u1, v1] = g.edges[e];
    for (std::size_t f = 0; f < m; ++f) {
      const auto [u2, v2] = g.edges[f];
      if (d[u1][u2] + d[v1][v2] != d[u1][v2] + d[v1][u2]) rel.set(e, f);
    }
  }
  return rel;
}

std::vector<std::vector<std::size_t>> theta_star_classes(const GenericGraph& g) {
  const ThetaRelation rel = theta_relation_oracle(g);
  const std::size_t m = g.edge_count();
  std::vector<bool> done(m, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < m; ++start) {
    if (done[start]) continue;
    std::vector<std::size_t> members{start};
    done[start] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t f = 0; f < m; ++f)
        if (!done[f] && rel.related(members[k], f)) {
          done[f] = true;
          members.push_back(f);
        }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

PartialCubeCheck is_partial_cube_check(const GenericGraph& g) {
  PartialCubeCheck out;
  if (g.vertex_count == 0) {
    out.witness = "empty graph";
    return out;
  }

  // Bipartiteness by BFS layering; an edge inside a layer closes an odd cycle.
  std::vector<std::size_t> parent(g.vertex_count, g.vertex_count);
  std::vector<int> depth(g.vertex_count, -1);
  std::deque<std::size_t> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const std::size_t v : g.adjacency[u]) {
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  for (const int x : depth)
    if (x < 0) throw std::invalid_argument("oracle requires a connected graph");
  for (const auto& [u, v] : g.edges) {
    if (depth[u] != depth[v]) continue;
    std::vector<std::size_t> left{u};
    std::vector<std::size_t> right{v};
    while (left.back() != right.back()) {
      left.push_back(parent[left.back()]);
      right.push_back(parent[right.back()]);
    }
    right.pop_back();
    out.odd_cycle = left;
    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
    out.witness = "odd cycle of length " + std::to_string(out.odd_cycle.size());
    return out;
  }

  const ThetaRelation rel = theta_relation_oracle(g);
  const std::size_t m = g.edge_count();
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f) {
      if (!rel.related(e, f)) continue;
      for (std::size_t h = 0; h < m; ++h)
        if (rel.related(f, h) && !rel.related(e, h)) {
          out.triple = {e, f, h};
          out.has_triple = true;
          out.witness = "Theta not transitive on edges " + std::to_string(e) + ", " + std::to_string(f) +
                        ", " + std::to_string(h);
          return out;
        }
    }

  // Theta is transitive here, so each row of the relation is a whole class.
  std::vector<bool> seen(m, false);
  for (std::size_t e = 0; e < m; ++e) {
    if (seen[e]) continue;
    std::vector<bool> removed(m, false);
    for (std::size_t f = 0; f < m; ++f)
      if (rel.related(e, f)) removed[f] = seen[f] = true;
    std::vector<std::vector<std::size_t>> adj(g.vertex_count);
    for (std::size_t f = 0; f < m; ++f)
      if (!removed[f]) {
        adj[g.edges[f].first].push_back(g.edges[f].second);
        adj[g.edges[f].second].push_back(g.edges[f].first);
      }
    std::vector<bool> reached(g.vertex_count, false);
    int components = 0;
    for (std::size_t s = 0; s < g.vertex_count; ++s) {
      if (reached[s]) continue;
      ++components;
      std::vector<std::size_t> stack{s};
      reached[s] = true;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const std::size_t v : adj[u])
          if (!reached[v]) {
            reached[v] = true;
            stack.push_back(v);
          }
      }
    }
    if (components != 2) {
      out.witness = "removing the Theta-class of edge " + std::to_string(e) + " leaves " +
                    std::to_string(components) + " components";
      return out;
    }
  }
  out.is_partial_cube = true;
  return out;
}

Int weighted_wiener_v_oracle(const WeightedTree& t) {
  const auto d = tree_distances(t);
  Int sum = 0;
  for (std::size_t x = 0; x < t.node_weights.size(); ++x)
    for (std::size_t y = 0; y < t.node_weights.size(); ++y)
      sum = checked::add(sum, checked::mul(checked::mul(t.node_weights[x], t.node_weights[y]), d[x][y]));
  return sum / 2;
}

Int weighted_edge_wiener_hat_oracle(const WeightedTree& t) {
  const auto d = tree_distances(t);
  Int sum = 0;
  for (const auto& e : t.edges)
    for (const auto& f : t.edges) {
      const Int dist = std::min({d[e.a][f.a], d[e.a][f.b], d[e.b][f.a], d[e.b][f.b]});
      sum = checked::add(sum, checked::mul(checked::mul(e.weight, f.weight), dist));
    }
  return sum / 2;
}

Int weighted_vertex_edge_wiener_oracle(const WeightedTree& t) {
  const auto d = tree_distances(t);
  Int sum = 0;
  for (std::size_t x = 0; x < t.node_weights.size(); ++x)
    for (const auto& e : t.edges) {
      const Int dist = std::min(d[x][e.a], d[x][e.b]);
      sum = checked::add(sum, checked::mul(checked::mul(t.node_weights[x], e.weight), dist));
    }
  return sum;
}

}  // namespace phenyl::oracle
