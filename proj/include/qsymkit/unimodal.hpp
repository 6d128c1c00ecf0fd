#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsymkit/composition.hpp"
#include "qsymkit/param_poly.hpp"

namespace qsym {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;

namespace unimodal {

// S (a subset of [n-1]) meets every block interior of alpha in a prefix.
bool is_alpha_unimodal(SubsetMask s, const Composition& alpha);
// Equivalent characterisation: k in S \ Set(alpha) forces k-1 in S or Set(alpha) or {0}.
bool is_alpha_unimodal_local(SubsetMask s, const Composition& alpha);

std::vector<SubsetMask> enumerate_unimodal(const Composition& alpha);
Integer count_unimodal(const Composition& alpha);  // 2^{l-1} prod alpha_i

// Moebius function mu(empty, S) of U_alpha under inclusion, closed form.
int moebius_unimodal(const Composition& alpha, SubsetMask s);

// V_alpha: compositions gamma with Set(alpha) gamma-unimodal.
std::vector<Composition> enumerate_v(const Composition& alpha);
Integer count_v(const Composition& alpha);  // 2^{n-1} (3/4)^m
bool is_order_ideal_of_refinement(const std::vector<Composition>& family, int n);

struct SublatticeWitness {
  Composition alpha;
  Composition first;
  Composition second;
  Composition join;  // Set(join) = Set(first) & Set(second)
};
// Look for gamma, delta in V_alpha whose join (Set intersection) leaves V_alpha.
std::optional<SublatticeWitness> find_non_sublattice_witness(int max_n);

// Number of pairs (alpha |= n, S in U_alpha).
Integer unimodal_pair_count(int n);
// f(n) = 4 f(n-1) - f(n-2), f(0) = 0, f(1) = 1.
Integer unimodal_pair_recursion(int n);
// [z^n] of tz / (1 - (1+q)(1+t)z + q z^2), t stored in the y slot.
ParamPoly unimodal_series_coefficient(int n);
// Same coefficient by enumeration: sum of q^{|S|} t^{l(alpha)}.
ParamPoly unimodal_series_enumerated(int n);

// sigma in CONS(alpha, beta): each alpha-block ends with its maximum and the
// maxima increase inside each beta-block.
bool is_consistent(const Permutation& sigma, const Composition& alpha, const Composition& beta);
// Lexicographic order. n <= 8 filters S_n; larger n walks the hook forest.
std::vector<Permutation> enumerate_cons(const Composition& alpha, const Composition& beta);
Integer cons_count(const Composition& alpha, const Composition& beta);

struct HookForest {
  // parent[v] for v in 1..n (index 0 unused); 0 marks a root.
  std::vector<int> parent;
  std::vector<int> hook;  // subtree sizes, 1-based
  Integer hook_product() const;
};
HookForest hook_forest(const Composition& alpha, const Composition& beta);
// Decreasing labelings of the forest (parent value above child value).
std::vector<Permutation> forest_labelings(const HookForest& f);

// Sum over alpha <= beta with Set(gamma) alpha-unimodal of
// |CONS(alpha, beta)| (-1)^{|Set(gamma) \ Set(alpha)|}.
Integer cons_alternating_sum(const Composition& beta, const Composition& gamma);

}  // namespace unimodal
}  // namespace qsym
