#include "phenyl/hyper.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "phenyl/cut_index.hpp"

namespace phenyl {

namespace {

// Side-1 edge set of a class as a bitset, trimmed to its nonzero word range.
struct SideMask {
  std::vector<std::uint64_t> one;
  std::size_t lo = 0;  // first nonzero word
  std::size_t hi = 0;  // one past the last nonzero word
  Int ones = 0;
};

SideMask mask_of(const ThetaClass& c, std::size_t words) {
  SideMask s{std::vector<std::uint64_t>(words, 0), words, 0, 0};
  for (std::size_t e = 0; e < c.side_of_edge.size(); ++e) {
    if (c.side_of_edge[e] != EdgeSide::One) continue;
    s.one[e / 64] |= std::uint64_t{1} << (e % 64);
    s.lo = std::min(s.lo, e / 64);
    s.hi = e / 64 + 1;
    ++s.ones;
  }
  if (s.ones == 0) s.lo = 0;
  return s;
}

// Edges of class `of` lying on side 1 of class `side`.
Int cut_edges_on_one(const ThetaClass& of, const ThetaClass& side) {
  Int k = 0;
  for (const std::size_t e : of.edge_ids) k += side.side_of_edge[e] == EdgeSide::One;
  return k;
}

}  // namespace

PairCounts pair_counts(const Phenylene& g, const std::vector<ThetaClass>& classes, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("pair_counts needs two distinct classes");
  const ThetaClass& a = classes.at(i);
  const ThetaClass& b = classes.at(j);
  PairCounts pc{i, j};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const EdgeSide sa = a.side_of_edge[e];
    const EdgeSide sb = b.side_of_edge[e];
    if (sa == EdgeSide::Cut || sb == EdgeSide::Cut) continue;
    if (sa == EdgeSide::Zero)
      ++(sb == EdgeSide::Zero ? pc.m00 : pc.m01);
    else
      ++(sb == EdgeSide::Zero ? pc.m10 : pc.m11);
  }
  return pc;
}

Int pair_contribution(const PairCounts& pc) {
  return checked::add(checked::mul(pc.m11, pc.m00, "pair contribution"),
                      checked::mul(pc.m10, pc.m01, "pair contribution"), "pair contribution");
}

// Only m11 needs a bitset intersection. The row and column totals come from
// side sizes minus the other class's edges on that side.
void for_each_pair(const Phenylene& g, const std::vector<ThetaClass>& classes,
                   const std::function<void(const PairCounts&)>& visit) {
  const std::size_t words = (g.edge_count() + 63) / 64;
  const Int m = static_cast<Int>(g.edge_count());
  std::vector<SideMask> masks;
  masks.reserve(classes.size());
  for (const auto& c : classes) masks.push_back(mask_of(c, words));

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const SideMask& a = masks[i];
    const Int size_i = static_cast<Int>(classes[i].edge_ids.size());
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const SideMask& b = masks[j];
      PairCounts pc{i, j};
      const std::size_t lo = std::max(a.lo, b.lo);
      const std::size_t hi = std::min(a.hi, b.hi);
      for (std::size_t w = lo; w < hi; ++w) pc.m11 += std::popcount(a.one[w] & b.one[w]);
      const Int row_one = a.ones - cut_edges_on_one(classes[j], classes[i]);
      const Int col_one = b.ones - cut_edges_on_one(classes[i], classes[j]);
      pc.m10 = row_one - pc.m11;
      pc.m01 = col_one - pc.m11;
      pc.m00 = m - size_i - static_cast<Int>(classes[j].edge_ids.size()) - pc.m11 - pc.m10 - pc.m01;
      visit(pc);
    }
  }
}

Int wwe_star(const Phenylene& g, const std::vector<ThetaClass>& classes) {
  Int sum = 0;
  for_each_pair(g, classes, [&](const PairCounts& pc) { sum = checked::add(sum, pair_contribution(pc), "WW_e*"); });
  return sum;
}

Int edge_hyper_wiener(Int w_e, Int wwe_star_value, Int edge_count) {
  const Int twice = checked::mul(2, w_e, "WW_e");
  return checked::sub(checked::add(twice, wwe_star_value, "WW_e"), checked::pairs(edge_count), "WW_e");
}

Int edge_hyper_wiener(const Phenylene& g) {
  const EdgeWienerResult r = edge_wiener_cut(g);
  return edge_hyper_wiener(r.w_e, wwe_star(g, theta_classes(g)), r.edge_count);
}

}  // namespace phenyl
