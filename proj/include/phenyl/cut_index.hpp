#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "phenyl/checked.hpp"
#include "phenyl/phenylene.hpp"

namespace phenyl {

/// The three weighted Wiener indices of one quotient tree.
struct TreeTerms {
  Int w_e_hat = 0;
  Int w_v = 0;
  Int w_ve = 0;

  friend bool operator==(const TreeTerms&, const TreeTerms&) = default;
};

struct EdgeWienerResult {
  Int w_e_hat = 0;
  Int w_e = 0;
  Int edge_count = 0;
  std::array<TreeTerms, 4> per_tree;  // index i holds T_{i+1}
};

/// Thrown when a result breaks hat-W_e = W_e - binom(|E|, 2) or the twelve
/// tree terms do not add up.
class IdentityViolation : public std::logic_error {
 public:
  explicit IdentityViolation(const std::string& what) : std::logic_error(what) {}
};

/// hat-W_e(G) as the sum of the twelve weighted tree indices of T_1..T_4,
/// and W_e(G) = hat-W_e(G) + binom(|E|, 2). Linear in |E| up to the
/// union-find factor.
EdgeWienerResult edge_wiener_cut(const Phenylene& g);

void check_edge_identity(const EdgeWienerResult& r);

}  // namespace phenyl
