#pragma once

// Fixtures and helpers shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phenyl/closed_forms.hpp"
#include "phenyl/cuts.hpp"
#include "phenyl/hyper.hpp"
#include "phenyl/phenylene.hpp"
#include "phenyl/squeeze.hpp"
#include "phenyl/tree_wiener.hpp"

namespace phenyl::testing {

inline constexpr std::string_view kZigzag3 = "phenylene v1\n3\n2 1 0\n3 2 1\n";
inline constexpr std::string_view kBranched4 = "phenylene v1\n4\n2 1 0\n3 2 1\n4 2 5\n";
inline constexpr std::string_view kCoil6 = "phenylene v1\n6\n2 1 0\n3 2 1\n4 3 2\n5 4 3\n6 5 4\n";

inline Phenylene phenylene_of(const SqueezeSpec& spec) { return build_phenylene(validate_squeeze(spec)); }
inline Phenylene phenylene_of(std::string_view text) { return phenylene_of(parse_squeeze_spec(text)); }
inline Phenylene linear(int n) { return phenylene_of(generate_linear_spec(n)); }

// Hexagon 0's corner 3: the far end of the chain axis on the first hexagon.
inline constexpr std::size_t kChainStartVertex = 3;

struct SideSums {
  Int n1 = 0;
  Int n2 = 0;
  Int m1 = 0;
  Int m2 = 0;
};

// Link aggregates with side 1 taken as the side that holds `anchor`, sorted
// along the chain by n1.
inline std::vector<SideSums> anchored_links(const QuotientTree& t, std::size_t anchor) {
  const std::size_t node = t.component_of_vertex().at(anchor);
  std::vector<SideSums> out;
  for (const TreeLink& l : t.links()) {
    if (t.on_lower_side(l, node))
      out.push_back({l.n2, l.n1, l.m2, l.m1});
    else
      out.push_back({l.n1, l.n2, l.m1, l.m2});
  }
  std::sort(out.begin(), out.end(), [](const SideSums& a, const SideSums& b) { return a.n1 < b.n1; });
  return out;
}

// Cut labels for a linear chain. A is the long class-1 cut, B_i and C_i the
// class-2 and class-3 cuts of hexagon i, D_i the cut through square i.
struct CutLabel {
  char kind = '?';
  int index = 0;  // 1-based hexagon or square position
};

inline std::vector<CutLabel> label_linear_cuts(const Phenylene& g, const std::vector<ThetaClass>& classes) {
  std::vector<CutLabel> labels(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const EdgeRecord& e = g.edges[classes[c].edge_ids.front()];
    switch (e.direction_class) {
      case 1: labels[c] = {'A', 0}; break;
      case 2: labels[c] = {'B', e.hexagon + 1}; break;
      case 3: labels[c] = {'C', e.hexagon + 1}; break;
      default: labels[c] = {'D', e.square + 1}; break;
    }
  }
  return labels;
}

inline std::optional<PairFamily> family_of(CutLabel x, CutLabel y) {
  auto rank = [](char k) { return std::string_view("ABCD").find(k); };
  if (rank(x.kind) > rank(y.kind) || (x.kind == y.kind && x.index > y.index)) std::swap(x, y);
  const int i = x.index;
  const int j = y.index;
  const std::string key{x.kind, y.kind};
  if (key == "AB") return PairFamily::AB;
  if (key == "AC") return PairFamily::AC;
  if (key == "AD") return PairFamily::AD;
  if (key == "BB") return PairFamily::BB;
  if (key == "CC") return PairFamily::CC;
  if (key == "DD") return PairFamily::DD;
  if (key == "BC") return i < j ? PairFamily::BC_less : i > j ? PairFamily::BC_greater : PairFamily::BC_same;
  if (key == "BD") return i <= j ? PairFamily::BD_less_eq : PairFamily::BD_greater;
  if (key == "CD") return i <= j ? PairFamily::CD_less_eq : PairFamily::CD_greater;
  return std::nullopt;
}

// Measured per-family totals of m11*m00 + m10*m01 on PH_n.
inline std::map<PairFamily, Int> measured_family_sums(int n, Int* total = nullptr) {
  const Phenylene g = linear(n);
  const auto classes = theta_classes(g);
  const auto labels = label_linear_cuts(g, classes);
  std::map<PairFamily, Int> sums;
  for (PairFamily f : kPairFamilies) sums[f] = 0;
  Int all = 0;
  for_each_pair(g, classes, [&](const PairCounts& pc) {
    const Int f = pair_contribution(pc);
    all += f;
    if (auto fam = family_of(labels[pc.i], labels[pc.j])) sums[*fam] += f;
  });
  if (total) *total = all;
  return sums;
}

}  // namespace phenyl::testing
