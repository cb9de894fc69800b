#pragma once

#include <array>
#include <string_view>

#include "phenyl/checked.hpp"
#include "phenyl/cut_index.hpp"

namespace phenyl {

/// Families of Theta-class pairs in the linear phenylene PH_n. A is the long
/// cut through all hexagons, B_i and C_i the two slanted cuts of hexagon i,
/// D_i the cut through the square between hexagons i and i+1.
enum class PairFamily {
  AB,
  AC,
  AD,
  BB,
  CC,
  DD,
  BC_less,
  BC_greater,
  BC_same,
  BD_less_eq,
  BD_greater,
  CD_less_eq,
  CD_greater,
};

inline constexpr std::array<PairFamily, 13> kPairFamilies{
    PairFamily::AB,      PairFamily::AC,         PairFamily::AD,         PairFamily::BB,         PairFamily::CC,
    PairFamily::DD,      PairFamily::BC_less,    PairFamily::BC_greater, PairFamily::BC_same,    PairFamily::BD_less_eq,
    PairFamily::BD_greater, PairFamily::CD_less_eq, PairFamily::CD_greater};

std::string_view family_label(PairFamily f);

/// Sum of m11*m00 + m10*m01 over the pairs of one family in PH_n.
Int family_contribution(PairFamily f, Int n);

struct LinearFormulaReport {
  Int n = 0;
  Int w_e_hat = 0;
  Int w_e = 0;
  Int wwe_star = 0;
  Int ww_e = 0;
  std::array<TreeTerms, 4> per_tree;  // T_2 and T_3 coincide
  std::array<Int, kPairFamilies.size()> family_sums{};
};

/// Closed forms for PH_n, n >= 1. WW_e* is the sum of all thirteen pair
/// families, including the D_i, D_j pairs:
///   hat-W_e = 32n^3 - 39n^2 + 22n - 3
///   W_e     = 32n^3 - 7n^2 + 2n
///   WW_e*   = (72n^4 - 165n^3 + 144n^2 - 48n + 6) / 3
///   WW_e    = 24n^4 + 9n^3 + 2n^2 + 8n - 1
LinearFormulaReport linear_formulas(Int n);

}  // namespace phenyl
