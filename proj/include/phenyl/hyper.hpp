#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "phenyl/checked.hpp"
#include "phenyl/cuts.hpp"
#include "phenyl/phenylene.hpp"

namespace phenyl {

/// Edge counts by side for a pair of Theta-classes: m<k><l> counts edges on
/// side k of class i and side l of class j. Cut edges of either class are
/// not counted.
struct PairCounts {
  std::size_t i = 0;
  std::size_t j = 0;
  Int m00 = 0;
  Int m01 = 0;
  Int m10 = 0;
  Int m11 = 0;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

PairCounts pair_counts(const Phenylene& g, const std::vector<ThetaClass>& classes, std::size_t i, std::size_t j);

/// m11*m00 + m10*m01. For cuts that do not cross one of the four counts is
/// zero, so the same expression covers both positions of a pair.
Int pair_contribution(const PairCounts& pc);

/// Visits the counts of every unordered pair i < j in lexicographic order.
/// Uses per-class side bitsets; the counts equal pair_counts exactly.
void for_each_pair(const Phenylene& g, const std::vector<ThetaClass>& classes,
                   const std::function<void(const PairCounts&)>& visit);

/// Sum of pair_contribution over all unordered class pairs.
Int wwe_star(const Phenylene& g, const std::vector<ThetaClass>& classes);

/// WW_e = 2 W_e + WW_e* - binom(|E|, 2).
Int edge_hyper_wiener(Int w_e, Int wwe_star_value, Int edge_count);
Int edge_hyper_wiener(const Phenylene& g);

}  // namespace phenyl
