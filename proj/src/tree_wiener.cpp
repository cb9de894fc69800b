#include "phenyl/tree_wiener.hpp"

#include <algorithm>

namespace phenyl {

QuotientTree QuotientTree::from_weights(std::vector<Int> node_weights, const std::vector<WeightedEdge>& links) {
  const std::size_t k = node_weights.size();
  if (k == 0) throw QuotientNotTree("quotient graph has no nodes");
  if (links.size() + 1 != k)
    throw QuotientNotTree("quotient graph has " + std::to_string(k) + " nodes and " +
                          std::to_string(links.size()) + " links");

  QuotientTree t;
  t.node_weight_ = std::move(node_weights);
  for (const Int w : t.node_weight_) t.total_node_ = checked::add(t.total_node_, w, "node weight total");

  // Incident links in compressed rows.
  std::vector<std::size_t> row(k + 1, 0);
  t.links_.reserve(links.size());
  for (const auto& l : links) {
    if (l.a >= k || l.b >= k || l.a == l.b) throw QuotientNotTree("invalid quotient link");
    TreeLink tl;
    tl.a = std::min(l.a, l.b);
    tl.b = std::max(l.a, l.b);
    tl.weight = l.weight;
    t.total_link_ = checked::add(t.total_link_, l.weight, "link weight total");
    ++row[tl.a + 1];
    ++row[tl.b + 1];
    t.links_.push_back(tl);
  }
  for (std::size_t v = 0; v < k; ++v) row[v + 1] += row[v];
  std::vector<std::size_t> incident(row[k]);
  {
    std::vector<std::size_t> fill(row.begin(), row.end() - 1);
    for (std::size_t li = 0; li < t.links_.size(); ++li) {
      incident[fill[t.links_[li].a]++] = li;
      incident[fill[t.links_[li].b]++] = li;
    }
  }

  // Iterative DFS from node 0: entry/exit stamps and a preorder.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_link(k, kNone);
  std::vector<std::size_t> order;
  order.reserve(k);
  t.enter_.assign(k, kNone);
  t.leave_.assign(k, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, row[0]}};  // node, next incident slot
  t.enter_[0] = 0;
  order.push_back(0);
  std::size_t clock = 1;
  while (!stack.empty()) {
    auto& [node, slot] = stack.back();
    if (slot == row[node + 1]) {
      t.leave_[node] = clock;
      stack.pop_back();
      continue;
    }
    const std::size_t li = incident[slot++];
    if (li == parent_link[node]) continue;
    TreeLink& link = t.links_[li];
    const std::size_t next = link.a == node ? link.b : link.a;
    if (t.enter_[next] != kNone) throw QuotientNotTree("quotient graph contains a cycle");
    parent_link[next] = li;
    link.upper = node;
    link.lower = next;
    t.enter_[next] = clock++;
    order.push_back(next);
    stack.emplace_back(next, row[next]);
  }
  if (order.size() != k) throw QuotientNotTree("quotient graph is disconnected");

  // Subtree sums in reverse preorder.
  std::vector<Int> sub_nodes(t.node_weight_);
  std::vector<Int> sub_links(k, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t v = *it;
    const std::size_t li = parent_link[v];
    if (li == kNone) continue;
    TreeLink& link = t.links_[li];
    link.n2 = sub_nodes[v];
    link.m2 = sub_links[v];
    link.n1 = t.total_node_ - link.n2;
    link.m1 = t.total_link_ - link.m2 - link.weight;
    sub_nodes[link.upper] = checked::add(sub_nodes[link.upper], sub_nodes[v], "subtree weight");
    sub_links[link.upper] = checked::add(sub_links[link.upper], checked::add(sub_links[v], link.weight), "subtree weight");
  }
  return t;
}

QuotientTree quotient_tree(const Phenylene& g, int direction_class) {
  if (direction_class < 1 || direction_class > 4) throw std::invalid_argument("direction class must be 1..4");
  const std::uint32_t nv = static_cast<std::uint32_t>(g.vertex_count);
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  // Components of G - E_i. Roots always link under the smaller index, so a
  // component's root is its smallest vertex and numbering roots in vertex
  // order numbers components by smallest vertex.
  std::vector<std::uint32_t> root(nv);
  for (std::uint32_t v = 0; v < nv; ++v) root[v] = v;
  auto find = [&root](std::uint32_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (const auto& e : g.edges) {
    if (e.direction_class == direction_class) continue;
    const std::uint32_t a = find(e.u);
    const std::uint32_t b = find(e.v);
    if (a < b)
      root[b] = a;
    else if (b < a)
      root[a] = b;
  }
  std::vector<std::uint32_t> component(nv);
  std::uint32_t k = 0;
  for (std::uint32_t v = 0; v < nv; ++v) component[v] = root[v] == v ? k++ : component[find(v)];

  // Node weights, and E_i edges bucketed by their smaller component so that
  // parallel edges between the same two components merge into one link.
  std::vector<Int> weights(k, 0);
  std::vector<TreeImage> images(g.edge_count());
  std::vector<std::uint32_t> bucket_start(std::size_t{k} + 1, 0);
  for (const auto& e : g.edges) {
    const std::uint32_t cu = component[e.u];
    const std::uint32_t cv = component[e.v];
    if (e.direction_class != direction_class) {
      ++weights[cu];
      images[e.id] = {cu, false};
      continue;
    }
    if (cu == cv) throw QuotientNotTree("an E_i edge joins a component to itself");
    ++bucket_start[std::min(cu, cv) + 1];
  }
  for (std::uint32_t c = 0; c < k; ++c) bucket_start[c + 1] += bucket_start[c];
  std::vector<EdgeId> bucketed(bucket_start[k]);
  {
    std::vector<std::uint32_t> fill(bucket_start.begin(), bucket_start.end() - 1);
    for (const auto& e : g.edges)
      if (e.direction_class == direction_class) bucketed[fill[std::min(component[e.u], component[e.v])]++] = e.id;
  }

  std::vector<QuotientTree::WeightedEdge> links;
  std::vector<std::uint32_t> link_to(k, kNone);  // per far component, valid within the current bucket
  for (std::uint32_t a = 0; a < k; ++a) {
    for (std::uint32_t p = bucket_start[a]; p < bucket_start[a + 1]; ++p) {
      const EdgeRecord& e = g.edges[bucketed[p]];
      const std::uint32_t b = std::max(component[e.u], component[e.v]);
      if (link_to[b] == kNone || links[link_to[b]].a != a) {
        link_to[b] = static_cast<std::uint32_t>(links.size());
        links.push_back({a, b, 0});
      }
      ++links[link_to[b]].weight;
      images[e.id] = {link_to[b], true};
    }
  }

  QuotientTree t = QuotientTree::from_weights(std::move(weights), links);
  t.component_ = std::move(component);
  t.images_ = std::move(images);
  return t;
}

Int tree_wiener_v(const QuotientTree& t) {
  Int sum = 0;
  for (const auto& l : t.links()) sum = checked::add(sum, checked::mul(l.n1, l.n2, "W_v"), "W_v");
  return sum;
}

Int tree_wiener_e_hat(const QuotientTree& t) {
  Int sum = 0;
  for (const auto& l : t.links()) sum = checked::add(sum, checked::mul(l.m1, l.m2, "hat W_e"), "hat W_e");
  return sum;
}

Int tree_wiener_ve(const QuotientTree& t) {
  Int sum = 0;
  for (const auto& l : t.links()) {
    const Int term = checked::add(checked::mul(l.n1, l.m2, "W_ve"), checked::mul(l.n2, l.m1, "W_ve"), "W_ve");
    sum = checked::add(sum, term, "W_ve");
  }
  return sum;
}

}  // namespace phenyl
