#include "phenyl/cut_index.hpp"

#include "phenyl/tree_wiener.hpp"

namespace phenyl {

EdgeWienerResult edge_wiener_cut(const Phenylene& g) {
  EdgeWienerResult r;
  r.edge_count = static_cast<Int>(g.edge_count());
  for (int cls = 1; cls <= 4; ++cls) {
    const QuotientTree t = quotient_tree(g, cls);
    TreeTerms& terms = r.per_tree[static_cast<std::size_t>(cls - 1)];
    terms.w_e_hat = tree_wiener_e_hat(t);
    terms.w_v = tree_wiener_v(t);
    terms.w_ve = tree_wiener_ve(t);
    r.w_e_hat = checked::add(r.w_e_hat, terms.w_e_hat, "hat W_e");
    r.w_e_hat = checked::add(r.w_e_hat, terms.w_v, "hat W_e");
    r.w_e_hat = checked::add(r.w_e_hat, terms.w_ve, "hat W_e");
  }
  r.w_e = checked::add(r.w_e_hat, checked::pairs(r.edge_count), "W_e");
  check_edge_identity(r);
  return r;
}

void check_edge_identity(const EdgeWienerResult& r) {
  Int total = 0;
  for (const auto& t : r.per_tree) total += t.w_e_hat + t.w_v + t.w_ve;
  if (total != r.w_e_hat) throw IdentityViolation("tree terms do not sum to hat W_e");
  if (r.w_e - r.w_e_hat != checked::pairs(r.edge_count))
    throw IdentityViolation("W_e - hat W_e != binom(|E|, 2)");
}

}  // namespace phenyl
