#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsymkit/poset.hpp"
#include "qsymkit/ppartitions.hpp"
#include "qsymkit/qsym.hpp"
#include "qsymkit/sym.hpp"

namespace qsym::families {

using posets::DirectedGraph;
using posets::Poset;
using pp::Certificates;

// Bit e set: edge e is traversed against its direction in G.
struct Orientation {
  std::uint32_t reversed = 0;
  bool is_reversed(int e) const { return (reversed >> e) & 1U; }
};

// Result of a Psi-positive decomposition together with its cross-check.
struct FamilyReport {
  QSymElement function;        // the family member itself, Monomial basis
  QSymElement omega_psi;       // omega of it (after any q -> q+1 shift), Psi basis
  Certificates certificates;   // z_alpha * coefficient of Psi_alpha in omega_psi
  bool positive = true;        // certificates in N[params]
  bool routes_agree = true;    // coloring route == orientation route
};

// Coloring routes (definitions), Monomial basis, coefficients in Z[q] or Z[y,z].
QSymElement chromatic_x(const DirectedGraph& g);
QSymElement k_balanced_x(const DirectedGraph& g, int k);
QSymElement llt_unicellular(const DirectedGraph& g);
// Colorings strictly increasing along the edges in `strict`, weight q^{asc - |strict|}.
QSymElement llt_vertical_coloring(const DirectedGraph& g, const std::vector<int>& strict);
// y^asc z^inv, with y and z in the y and z slots.
QSymElement b_polynomial(const DirectedGraph& g);

bool is_k_balanced(const Orientation& theta, const DirectedGraph& g, int k);

// Orientation routes. The certificates describe omega of the function.
FamilyReport chromatic_psi(const DirectedGraph& g);
FamilyReport k_balanced_psi(const DirectedGraph& g, int k);
FamilyReport llt_psi(const DirectedGraph& g);  // omega G_G(x; q+1)
FamilyReport llt_vertical(const DirectedGraph& g, const std::vector<int>& strict);  // omega G_{G,S}(x; q+1)
FamilyReport b_psi(const DirectedGraph& g);  // omega B_G(x; y+1, z+1)

// The specialisations of B. Each returns true when both sides agree.
struct BSpecialisations {
  bool chromatic = false;  // X_G(q) = [z^{|E|}] B(qz, z)
  bool llt = false;        // G_G(q) = B(q, 1)
  bool tutte = false;      // y^{|E|} Tutte(1/y - 1) = B(y, y)
  bool chromatic_as_printed = false;  // [z^n] B(qz, z)
  bool llt_as_printed = false;        // B(q, 0)
};
BSpecialisations b_specialisations(const DirectedGraph& g);

// Sum over edge subsets S of q^{|S|} p_{lambda(S)}; the graph is read undirected.
SymElement tutte_multivariate(const DirectedGraph& g);

class Matroid {
 public:
  // Bases as lists of ground-set elements 0..n-1. Validates the exchange axiom.
  Matroid(int n, const std::vector<std::vector<int>>& bases);
  static Matroid uniform(int n, int r);

  int size() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<std::uint32_t>& bases() const { return bases_; }
  bool is_basis(std::uint32_t m) const;
  // e < e' iff e in B, e' not in B and B - e + e' is a basis.
  Poset basis_poset(std::uint32_t basis) const;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<std::uint32_t> bases_;
};

// Unique minimising basis of sum f(B); f has values >= 1.
bool is_generic(const Matroid& m, const std::vector<int>& f);
QSymElement matroid_f(const Matroid& m);  // brute force over generic colorings
FamilyReport matroid_psi(const Matroid& m);  // sum of K_{P_B} for order-reversing labels
// Generic colorings (values in 1..n) that are not injective; empty when none exist.
std::vector<std::vector<int>> generic_noninjective_witnesses(const Matroid& m, std::size_t limit = 4);
// omega F of U_{n,r} in Psi. The corrected form sums over k = 0..r with shape
// (1^{m-1}, k+1, 1^{r-k}), m = n - r, coefficient binom(n, k+1) except 1 at k = 0.
// `printed` gives sum_k binom(n, k+1) Psi_{(1^{r-1}, k+1, 1^{m-k})} instead.
QSymElement uniform_matroid_closed_form(int n, int r, bool printed = false);

// Eulerian quasisymmetric functions. Keys are j.
std::map<int, QSymElement> eulerian_q(int n);        // Fundamental basis, DEX over S_n
std::map<int, QSymElement> cycle_eulerian_q(int n);  // long cycles only
// Collapse a j-indexed family to sum_j q^j Q_j (Fundamental basis).
QSymElement q_weighted_sum(const std::map<int, QSymElement>& family, int degree);

// sum_S q^{|S|} K_{P_S} over zigzag paths, as certificates.
Certificates path_certificates(int n);
// sum over 0 < |S| < n of q^{|S|} K_{P_S} over zigzag cycles.
Certificates cycle_certificates(int n);
Certificates path_closed_form(int n);   // A_l(q) prod [alpha_i]_q
Certificates cycle_closed_form(int n);  // n q A_{l-1}(q) prod [alpha_i]_q, n q [n-1]_q for (n)

// Power-sum closed forms, p basis.
SymElement eulerian_closed_form(int n);
SymElement necklace_closed_form(int n);  // sum_j q^j F_{n,j}
SymElement necklace_route(int n);        // p_n + sum_S q^{|S|} K_{P_S}
// Thm for sum_j q^j Q_{(n),j}; `printed` uses q A_{l-1}(q) for l = 1 as well,
// otherwise the l = 1 factor is 1.
SymElement cycle_eulerian_closed_form(int n, bool printed);
SymElement cycle_eulerian_by_inversion(int n);
// sum_{d|n} mu(d)[n/d]_{q^d} and sum_{d|n} mu(d) q^d [n/d]_{q^d}.
std::pair<ParamPoly, ParamPoly> amusing_identity_sides(int n);

// Word oracles truncated to m variables, q weighted by the number of barred letters.
TruncatedPoly banner_oracle(int n, int m);
TruncatedPoly circular_word_oracle(int n, int m);  // words of the necklace route, j < n

// Schur functions and Roichman coefficients.
QSymElement schur(const Partition& lambda);  // Fundamental basis
Integer roichman_coeff(const Partition& lambda, const Partition& mu);

struct TreeReport {
  int trees = 0;
  bool distinct = true;
  bool top_coefficient_matches = true;  // [q^{n-1}] X = K of the tree poset, order-reversing
  std::vector<std::vector<int>> clash;  // parent arrays of a colliding pair
};
TreeReport distinguishes_rooted_trees(int n);
DirectedGraph rooted_tree_graph(const std::vector<int>& parent);

// The four posets of the positivity counterexamples, in order A, B, C, D.
std::array<Poset, 4> counterexample_posets();

// Oriented simple graphs on n vertices up to isomorphism.
std::vector<DirectedGraph> oriented_graphs(int n);

}  // namespace qsym::families
