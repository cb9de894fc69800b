#include "phenyl/closed_forms.hpp"

#include <initializer_list>
#include <stdexcept>

namespace phenyl {

namespace {

// Evaluates sum coeffs[k] * n^(deg-k) / divisor; the division must be exact.
Int poly(Int n, std::initializer_list<Int> coeffs, Int divisor = 1) {
  Wide acc = 0;
  const Wide x = n;
  for (const Int c : coeffs) acc = acc * x + c;
  if (acc % divisor != 0) throw std::logic_error("closed form not divisible as expected");
  return checked::narrow(acc / divisor, "closed form");
}

}  // namespace

std::string_view family_label(PairFamily f) {
  switch (f) {
    case PairFamily::AB: return "A,B_i";
    case PairFamily::AC: return "A,C_i";
    case PairFamily::AD: return "A,D_i";
    case PairFamily::BB: return "B_i,B_j i<j";
    case PairFamily::CC: return "C_i,C_j i<j";
    case PairFamily::DD: return "D_i,D_j i<j";
    case PairFamily::BC_less: return "B_i,C_j i<j";
    case PairFamily::BC_greater: return "B_i,C_j i>j";
    case PairFamily::BC_same: return "B_i,C_i";
    case PairFamily::BD_less_eq: return "B_i,D_j i<=j";
    case PairFamily::BD_greater: return "B_i,D_j i>j";
    case PairFamily::CD_less_eq: return "C_i,D_j i<=j";
    case PairFamily::CD_greater: return "C_i,D_j i>j";
  }
  return "?";
}

Int family_contribution(PairFamily f, Int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (f) {
    case PairFamily::AB:
    case PairFamily::AC: return poly(n, {3, -6, 4, 0});
    case PairFamily::AD: return poly(n, {3, -6, 5, -2});
    case PairFamily::BB:
    case PairFamily::CC:
    case PairFamily::BC_less:
    case PairFamily::BC_greater: return poly(n, {8, -32, 46, -22, 0}, 3);
    case PairFamily::DD: return poly(n, {8, -32, 46, -34, 12}, 3);
    case PairFamily::BC_same: return poly(n, {32, -72, 43, 0}, 3);
    case PairFamily::BD_less_eq:
    case PairFamily::BD_greater:
    case PairFamily::CD_less_eq:
    case PairFamily::CD_greater: return poly(n, {8, -16, 10, -2, 0}, 3);
  }
  throw std::invalid_argument("unknown pair family");
}

LinearFormulaReport linear_formulas(Int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  LinearFormulaReport r;
  r.n = n;

  r.per_tree[0] = {0, poly(n, {9, -6, 1}), 0};
  r.per_tree[1] = {poly(n, {2, -6, 4, 0}, 3), poly(n, {6, -6, 4, 0}), poly(n, {4, -8, 4, 0})};
  r.per_tree[2] = r.per_tree[1];
  r.per_tree[3] = {poly(n, {2, -12, 22, -12}, 3), poly(n, {6, 0, -6, 0}), poly(n, {4, -12, 8, 0})};

  r.w_e_hat = poly(n, {32, -39, 22, -3});
  r.w_e = poly(n, {32, -7, 2, 0});
  r.wwe_star = poly(n, {72, -165, 144, -48, 6}, 3);
  r.ww_e = poly(n, {24, 9, 2, 8, -1});

  Int families = 0;
  for (std::size_t k = 0; k < kPairFamilies.size(); ++k) {
    r.family_sums[k] = family_contribution(kPairFamilies[k], n);
    families = checked::add(families, r.family_sums[k], "family sum");
  }

  Int tree_total = 0;
  for (const auto& t : r.per_tree) tree_total = checked::add(tree_total, t.w_e_hat + t.w_v + t.w_ve, "tree terms");
  const Int edges = 8 * n - 2;
  if (tree_total != r.w_e_hat || r.w_e - r.w_e_hat != checked::pairs(edges) || families != r.wwe_star ||
      r.ww_e != checked::add(checked::sub(checked::mul(2, r.w_e), checked::pairs(edges)), r.wwe_star))
    throw std::logic_error("closed forms are mutually inconsistent");
  return r;
}

}  // namespace phenyl
