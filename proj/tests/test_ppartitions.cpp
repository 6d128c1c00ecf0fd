#include <doctest.h>

#include "oracles/brute.hpp"
#include "qsymkit/error.hpp"
#include "qsymkit/io.hpp"
#include "qsymkit/ppartitions.hpp"
#include "qsymkit/sym.hpp"

using namespace qsym;
using namespace qsym::posets;

namespace {

oracle::Poly truncated(const QSymElement& e, int m) {
  oracle::Poly out;
  for (const auto& [x, c] : expand_truncated(e, m))
    if (!c.is_zero()) out[x] = c;
  return out;
}

oracle::Poly brute(const LabeledPoset& p) {
  return oracle::reverse_p_partitions(p.size(), p.poset().strict_relations(), p.labels(), p.size());
}

}  // namespace

TEST_CASE("K_P routes agree with reverse P-partitions") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets(n)) {
      LabeledPoset lp = naturally_labeled(p);
      pp::PsiReport r = pp::kp_psi(lp);
      CHECK(r.routes.size() == 3);
      CHECK(r.positive);
      CHECK(truncated(r.element, n) == brute(lp));
      for (const auto& [a, c] : r.certificates) {
        CHECK(c.is_constant());
        CHECK(c.constant() >= 0);
        CHECK(c.constant().get_den() == 1);
      }
    }
}

TEST_CASE("K_{P,w} for arbitrary labelings") {
  for (const Poset& p : all_posets(4)) {
    LabeledPoset lp = order_reversing_labeled(p);
    CHECK(truncated(pp::kp_fundamental(lp), 4) == brute(lp));
    // omega of the strict version is the natural K of the dual
    CHECK(omega(pp::kp_omega_strict(lp).element) == pp::kp_fundamental(lp));
  }
}

TEST_CASE("non-natural labels are rejected by the Psi routes") {
  LabeledPoset lp(chain(2), {2, 1});
  CHECK_THROWS_AS(pp::kp_psi(lp), InvalidArgument);
}

TEST_CASE("chains, antichains and disjoint chains") {
  CHECK(pp::kp_psi(chain(4)).element == sym_basis_element(SymBasis::h, Partition{4}));
  CHECK(pp::kp_psi(antichain(3)).element == sym_basis_element(SymBasis::p, Partition{1, 1, 1}));
  CHECK(pp::kp_psi(disjoint_chains({3, 1, 1})).element == sym_basis_element(SymBasis::h, Partition{3, 1, 1}));
}

TEST_CASE("complete bipartite posets") {
  // K_{r,m}: every minimal element below every maximal one.
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= 3; ++m) {
      auto cert = pp::kp_psi(complete_bipartite(r, m)).certificates;
      for (const auto& [a, c] : cert) CHECK(c.constant() > 0);
      CHECK(truncated(pp::kp_psi(complete_bipartite(r, m)).element, r + m) ==
            oracle::reverse_p_partitions(r + m, complete_bipartite(r, m).strict_relations(),
                                         naturally_labeled(complete_bipartite(r, m)).labels(), r + m));
    }
}

TEST_CASE("K_{P,E} against constant-on-classes colorings") {
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : all_posets(n)) {
      LabeledPoset lp = naturally_labeled(p);
      for (const Equivalence& e : all_equivalences(n)) {
        auto r = pp::kpe_psi(lp, e);
        // colorings f with x < y => f(x) <= f(y), constant on each class
        oracle::Poly want;
        oracle::for_each_map(n, n, [&](const std::vector<int>& f) {
          for (auto [x, y] : p.strict_relations())
            if (f[static_cast<std::size_t>(x)] > f[static_cast<std::size_t>(y)]) return;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              if (e.same(x, y) && f[static_cast<std::size_t>(x)] != f[static_cast<std::size_t>(y)]) return;
          oracle::add(want, oracle::exponents(f, n), 1);
        });
        CHECK(truncated(r.element, n) == want);
        CHECK(r.positive);
        if (is_chain_congruence(p, e)) CHECK(pp::kpe_recursion_check(lp, e).holds);
      }
    }
}

TEST_CASE("weighted K_P^d against weighted colorings") {
  for (int n = 1; n <= 3; ++n)
    for (const Poset& p : all_posets(n)) {
      LabeledPoset lp = naturally_labeled(p);
      std::vector<int> d(static_cast<std::size_t>(n), 1);
      while (true) {
        int total = 0;
        for (int x : d) total += x;
        oracle::Poly want;
        oracle::for_each_map(n, total, [&](const std::vector<int>& f) {
          for (auto [x, y] : p.strict_relations())
            if (f[static_cast<std::size_t>(x)] > f[static_cast<std::size_t>(y)]) return;
          std::vector<int> e(static_cast<std::size_t>(total), 0);
          for (int x = 0; x < n; ++x) e[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] += d[static_cast<std::size_t>(x)];
          oracle::add(want, e, 1);
        });
        auto r = pp::kpd_psi(lp, d);
        CHECK(truncated(r.element, total) == want);
        CHECK(r.positive);
        int i = 0;
        while (i < n && ++d[static_cast<std::size_t>(i)] > 3) d[static_cast<std::size_t>(i++)] = 1;
        if (i == n) break;
      }
    }
}

TEST_CASE("a zero weight gives a negative Psi coefficient") {
  auto r = pp::kpd_psi(naturally_labeled(chain(3)), {1, 0, 2});
  CHECK_FALSE(r.positive);
  CHECK(r.element == io::qsym_from_json(io::Json{
                         {"basis", "Psi"},
                         {"degree", 3},
                         {"terms", {{{"index", {3}}, {"coeff", "-1/3"}}, {{"index", {1, 2}}, {"coeff", 2}}}}}));
  CHECK_FALSE(r.notes.empty());
  // zero weight with nothing positive above it
  CHECK_THROWS_AS(pp::kpd_psi(naturally_labeled(chain(2)), {1, 0}), InvalidArgument);
}

TEST_CASE("weighted antichain gives power sums") {
  auto r = pp::kpd_psi(naturally_labeled(antichain(3)), {2, 1, 1});
  CHECK(r.element == sym_basis_element(SymBasis::p, Partition{2, 1, 1}));
}
