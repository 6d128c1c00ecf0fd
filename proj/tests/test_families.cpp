#include <doctest.h>

#include "oracles/brute.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/io.hpp"

using namespace qsym;
using namespace qsym::families;

namespace {

oracle::Poly truncated(const QSymElement& e, int m) {
  oracle::Poly out;
  for (const auto& [x, c] : expand_truncated(e, m))
    if (!c.is_zero()) out[x] = c;
  return out;
}

ParamPoly poly(const char* s) { return io::parse_poly_text(s); }

}  // namespace

TEST_CASE("chromatic and LLT functions against explicit colorings") {
  for (int n = 1; n <= 4; ++n)
    for (const DirectedGraph& g : oriented_graphs(n)) {
      CHECK(truncated(chromatic_x(g), n) == oracle::graph_colorings(n, g.edges, n, true));
      CHECK(truncated(llt_unicellular(g), n) == oracle::graph_colorings(n, g.edges, n, false));
      auto r = chromatic_psi(g);
      CHECK(r.routes_agree);
      CHECK(r.positive);
      CHECK(omega(r.function) == r.omega_psi);
      auto l = llt_psi(g);
      CHECK(l.routes_agree);
      CHECK(l.positive);
    }
}

TEST_CASE("the two chromatic fixtures") {
  auto g = chromatic_psi(DirectedGraph{4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}});
  CHECK(g.certificates[Composition{1, 2, 1}] == poly("4 + 4*q + 4*q^3 + 4*q^4"));
  auto h = chromatic_psi(DirectedGraph{5, {{0, 1}, {2, 1}, {3, 2}, {3, 4}}});
  CHECK(h.certificates[Composition{1, 3, 1}] == poly("2 + 5*q + 4*q^2 + 5*q^3 + 2*q^4"));
  CHECK_FALSE(is_unimodal(h.certificates[Composition{1, 3, 1}]));
}

TEST_CASE("k-balanced with k = 1 is the chromatic function") {
  for (const DirectedGraph& g : oriented_graphs(3)) CHECK(k_balanced_x(g, 1) == chromatic_x(g));
}

TEST_CASE("vertical strip LLT") {
  DirectedGraph g{5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}};
  auto r = llt_vertical(g, {0, 1});
  CHECK(r.routes_agree);
  CHECK(r.positive);
  CHECK(r.certificates.count(Composition{1, 2}) == 0);  // wrong degree
  CHECK(r.certificates[Composition{1, 1, 3}] == poly("4*q + 4*q^2"));
  // a genuinely non-unimodal coefficient
  DirectedGraph w{4, {{1, 2}, {1, 3}, {2, 0}, {3, 0}, {3, 2}}};
  CHECK(llt_vertical(w, {0, 3, 4}).certificates[Composition{2, 2}] == poly("1 + q^2"));
}

TEST_CASE("B polynomial specialisations") {
  for (const DirectedGraph& g : oriented_graphs(3)) {
    auto s = b_specialisations(g);
    CHECK(s.chromatic);
    CHECK(s.llt);
    CHECK(s.tutte);
    CHECK(b_psi(g).positive);
  }
}

TEST_CASE("uniform matroids: corrected closed form") {
  CHECK(uniform_matroid_closed_form(2, 1).to_string() == "Psi[2] + Psi[1,1]");
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      auto rep = matroid_psi(Matroid::uniform(n, r));
      CHECK(rep.routes_agree);
      CHECK(rep.function == matroid_f(Matroid::uniform(n, r)));
      CHECK(rep.omega_psi.identical(uniform_matroid_closed_form(n, r)));
    }
}

TEST_CASE("matroid validation") {
  CHECK_THROWS(Matroid(3, {{0, 1}, {2}}));
  CHECK_THROWS(Matroid(4, {{0, 1}, {2, 3}}));  // exchange fails
}

TEST_CASE("Eulerian functions specialise to Eulerian polynomials") {
  for (int n = 1; n <= 6; ++n) {
    QSymElement sum = q_weighted_sum(eulerian_q(n), n);
    Composition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(to_basis(sum, Basis::Monomial).coeff(ones) == oracle::excedance_polynomial(n, false));
    QSymElement cyc = q_weighted_sum(cycle_eulerian_q(n), n);
    CHECK(to_basis(cyc, Basis::Monomial).coeff(ones) == oracle::excedance_polynomial(n, true));
    CHECK(to_sym(sum, SymBasis::p) == eulerian_closed_form(n));
    CHECK(to_sym(cyc, SymBasis::p) == cycle_eulerian_closed_form(n, false));
  }
  CHECK_FALSE(to_sym(q_weighted_sum(cycle_eulerian_q(1), 1), SymBasis::p) == cycle_eulerian_closed_form(1, true));
}

TEST_CASE("amusing identity") {
  for (int n = 2; n <= 20; ++n) {
    auto [l, r] = amusing_identity_sides(n);
    CHECK(l == r);
  }
  auto [l1, r1] = amusing_identity_sides(1);
  CHECK_FALSE(l1 == r1);
}

TEST_CASE("Schur functions and Roichman coefficients") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& l : partitions(n)) CHECK(truncated(schur(l), n) == oracle::schur_ssyt(l.parts(), n));
  CHECK(roichman_coeff(Partition{3, 3}, Partition{2, 2, 2}) == -3);
  CHECK(roichman_coeff(Partition{2, 1}, Partition{1, 1, 1}) == 2);
}

TEST_CASE("rooted trees are told apart") {
  for (int n = 1; n <= 5; ++n) {
    auto r = distinguishes_rooted_trees(n);
    CHECK(r.distinct);
    CHECK(r.top_coefficient_matches);
  }
}

TEST_CASE("Tutte symmetric function of a triangle") {
  SymElement t = tutte_multivariate(DirectedGraph{3, {{0, 1}, {1, 2}, {0, 2}}});
  CHECK(t.coeff(Partition{1, 1, 1}) == ParamPoly(1));
  CHECK(t.coeff(Partition{2, 1}) == poly("3*q"));
  CHECK(t.coeff(Partition{3}) == poly("3*q^2 + q^3"));
}
