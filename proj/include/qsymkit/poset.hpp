#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsymkit/composition.hpp"
#include "qsymkit/unimodal.hpp"

namespace qsym::posets {

// Elements are 0..n-1; bit x of an ElementMask stands for element x.
using ElementMask = std::uint32_t;
inline constexpr int kMaxPosetSize = 16;

// Finite partial order stored as its full comparability closure.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n);  // antichain

  // Transitive closure of the given strict relations x < y. Throws on a cycle.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& less);

  int size() const { return n_; }
  bool leq(int x, int y) const { return (up_[static_cast<std::size_t>(x)] >> y) & 1U; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  ElementMask up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
  ElementMask down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }
  ElementMask all() const;

  std::vector<std::pair<int, int>> covers() const;
  std::vector<std::pair<int, int>> strict_relations() const;
  // Minimal elements of the induced subposet on `subset`.
  ElementMask minimal_in(ElementMask subset) const;
  ElementMask maximal_in(ElementMask subset) const;
  bool is_down_set(ElementMask m) const;
  bool is_chain(ElementMask m) const;
  bool is_antichain() const;

  // Relabel elements: element x becomes perm[x].
  Poset relabeled(const std::vector<int>& perm) const;
  Poset dual() const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.up_ == b.up_; }

 private:
  int n_ = 0;
  std::vector<ElementMask> up_;
  std::vector<ElementMask> down_;
};

// A poset with a bijective labeling w: P -> [n].
class LabeledPoset {
 public:
  LabeledPoset() = default;
  LabeledPoset(Poset p, std::vector<int> labels);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  int element_with_label(int l) const { return inverse_[static_cast<std::size_t>(l)]; }

  bool is_natural() const;          // x < y implies w(x) < w(y)
  bool is_order_reversing() const;  // x < y implies w(x) > w(y)
  LabeledPoset reversed_labels() const;  // n + 1 - w

 private:
  Poset poset_;
  std::vector<int> labels_;
  std::vector<int> inverse_;  // label -> element, 1-based
};

// Repeatedly strip the minimal element of smallest index.
std::vector<int> canonical_natural_labels(const Poset& p);
LabeledPoset naturally_labeled(const Poset& p);
LabeledPoset order_reversing_labeled(const Poset& p);
// Every natural labeling, one per linear extension.
std::vector<LabeledPoset> all_natural_labelings(const Poset& p);

// Permutation statistics. Sets are SubsetMask over [n-1].
SubsetMask des_set(const Permutation& sigma);
int des(const Permutation& sigma);
SubsetMask exc_set(const Permutation& sigma);
int exc(const Permutation& sigma);
// Descents after barring excedance letters, order 1bar < ... < nbar < 1 < ... < n.
SubsetMask dex_set(const Permutation& sigma);
bool is_permutation(const Permutation& sigma);
Permutation inverse(const Permutation& sigma);

// Jordan-Hoelder set: sigma such that listing w^{-1}(sigma_1), ... is a linear extension.
std::vector<Permutation> linear_extensions(const LabeledPoset& p);
bool in_jordan_hoelder(const LabeledPoset& p, const Permutation& sigma);
Integer count_linear_extensions(const Poset& p);

// Elements w^{-1}(sigma_j) for j in block i of alpha, i = 0-based.
ElementMask block_subposet(const LabeledPoset& p, const Permutation& sigma, const Composition& alpha, int block);
bool blocks_have_unique_minimum(const LabeledPoset& p, const Permutation& sigma, const Composition& alpha);

std::vector<Permutation> l_alpha(const LabeledPoset& p, const Composition& alpha);
std::vector<Permutation> l_star_alpha(const LabeledPoset& p, const Composition& alpha);

// Sign-reversing involution on L_alpha \ L*_alpha (natural labeling).
// Changes |DES \ Set(alpha)| by exactly one.
Permutation involution_phi(const LabeledPoset& p, const Composition& alpha, const Permutation& sigma);

// Order-preserving surjection f: P -> [k], stored as values f(x) in 1..k.
struct Surjection {
  std::vector<int> value;
  Composition type() const;
  int fiber_count() const;
  ElementMask fiber(int i) const;  // 1-based
  friend bool operator==(const Surjection&, const Surjection&) = default;
  friend auto operator<=>(const Surjection&, const Surjection&) = default;
};

std::vector<Surjection> all_surjections(const Poset& p);
std::vector<Surjection> surjections(const Poset& p, const Composition& alpha);
// Every fiber has a unique minimal element.
std::vector<Surjection> surjections_star(const Poset& p, const Composition& alpha);
bool fibers_have_unique_minimum(const Poset& p, const Surjection& f);

// The bijection L*_alpha -> O*_alpha and its inverse.
Surjection sigma_to_f(const LabeledPoset& p, const Composition& alpha, const Permutation& sigma);
Permutation f_to_sigma(const LabeledPoset& p, const Surjection& f);

// Equivalence relation on the elements.
class Equivalence {
 public:
  Equivalence() = default;
  explicit Equivalence(int n);  // discrete
  static Equivalence from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static Equivalence from_class_ids(const std::vector<int>& ids);

  int size() const { return static_cast<int>(class_of_.size()); }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  bool same(int x, int y) const { return class_of(x) == class_of(y); }
  // Blocks sorted by least element, elements ascending.
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  ElementMask block_mask(int c) const;
  int class_size(int x) const;
  bool is_discrete() const;

  friend bool operator==(const Equivalence& a, const Equivalence& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<int> class_of_;
  std::vector<std::vector<int>> blocks_;
};

std::vector<Equivalence> all_equivalences(int n);

// Classes are chains, and x < y in different classes forces max[x] < min[y].
bool is_chain_congruence(const Poset& p, const Equivalence& e);

struct ChainClosure {
  Equivalence closed;   // E'
  LabeledPoset poset;   // P'; keeps the input labels when they stay natural
};
// Classes of E' are the mutual-reachability classes of (<= union E); P'
// orders each class by the input labels.
ChainClosure chain_congruence_closure(const LabeledPoset& p, const Equivalence& e);

struct WeightedPoset {
  Poset poset;
  std::vector<int> weights;
  std::vector<std::vector<int>> classes;  // original elements of each quotient element
};
// Quotient by a chain congruence. Quotient elements follow the canonical
// natural order of the quotient.
WeightedPoset quotient(const Poset& p, const Equivalence& e);

// Constructors. Element i is v_{i+1}.
Poset chain(int n);
Poset antichain(int n);
Poset disjoint_chains(const std::vector<int>& lengths);
// i in S: v_i > v_{i+1}; otherwise v_i < v_{i+1}. S is a subset of [n-1].
Poset zigzag_path(SubsetMask s, int n);
// Same rule for i in [n] with v_{n+1} = v_1; requires 0 < |S| < n.
Poset zigzag_cycle(SubsetMask s, int n);
// r minimal elements below m maximal ones.
Poset complete_bipartite(int r, int m);
Poset direct_sum(const Poset& a, const Poset& b);
Poset ordinal_sum(const Poset& a, const Poset& b);
// parent[i] = -1 for the root; root is the minimum.
Poset rooted_tree(const std::vector<int>& parent);

// Canonical form up to isomorphism: lexicographically least relation matrix
// over all relabelings. Intended for n <= 8.
std::vector<std::uint32_t> canonical_form(const Poset& p);
bool isomorphic(const Poset& a, const Poset& b);
// One representative per isomorphism class, canonically labelled so the
// identity is a natural labeling.
std::vector<Poset> all_posets(int n);

// Directed multigraph without loops on vertices 0..n-1.
struct DirectedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
  bool is_simple() const;  // no parallel or antiparallel edges

  struct CycleEdge {
    int edge;
    bool along;  // the edge points in the traversal direction
  };
  // Simple cycles of the underlying undirected multigraph, each listed once.
  std::vector<std::vector<CycleEdge>> undirected_cycles() const;
};

// Transitive closure of the arcs; nullopt when they contain a cycle.
std::optional<Poset> orientation_closure(int n, const std::vector<std::pair<int, int>>& arcs);

std::vector<std::vector<int>> rooted_tree_parents(int n);  // non-isomorphic, parent arrays

}  // namespace qsym::posets
