#include <doctest.h>

#include "oracles/brute.hpp"
#include "qsymkit/error.hpp"
#include "qsymkit/poset.hpp"

using namespace qsym;
using namespace qsym::posets;

TEST_CASE("transitive closure and cycles") {
  Poset p = Poset::from_relations(4, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK_FALSE(p.comparable(0, 3));
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK(p.dual().less(2, 0));
}

TEST_CASE("posets up to isomorphism") {
  // 1, 1, 2, 5, 16, 63, 318
  std::vector<std::size_t> counts{1, 1, 2, 5, 16, 63, 318};
  for (int n = 0; n <= 6; ++n) CHECK(all_posets(n).size() == counts[static_cast<std::size_t>(n)]);
}

TEST_CASE("linear extensions against filtered permutations") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets(n)) {
      auto rel = p.strict_relations();
      CHECK(count_linear_extensions(p) == oracle::count_linear_extensions(n, rel));
      LabeledPoset lp = naturally_labeled(p);
      CHECK(lp.is_natural());
      CHECK(static_cast<long>(linear_extensions(lp).size()) == oracle::count_linear_extensions(n, rel));
    }
}

TEST_CASE("natural labelings") {
  Poset v = Poset::from_relations(3, {{0, 2}, {1, 2}});
  auto all = all_natural_labelings(v);
  CHECK(all.size() == 2);
  for (const auto& lp : all) CHECK(lp.is_natural());
  CHECK(order_reversing_labeled(v).is_order_reversing());
  CHECK_THROWS_AS(LabeledPoset(v, {1, 1, 2}), InvalidArgument);
}

TEST_CASE("descents, excedances, DEX") {
  Permutation s{3, 1, 4, 2};
  CHECK(mask_elements(des_set(s)) == std::vector<int>{1, 3});
  CHECK(exc(s) == oracle::excedances(s));
  CHECK(inverse(inverse(s)) == s);
  CHECK(is_permutation(s));
  CHECK_FALSE(is_permutation({1, 1, 2}));
}

TEST_CASE("the example poset and its L* sets") {
  // 1 < 3, 1 < 4, 2 < 4, 3 < 5, 4 < 5 with identity labels.
  LabeledPoset p(Poset::from_relations(5, {{0, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 4}}), {1, 2, 3, 4, 5});
  std::vector<Permutation> l;
  for (auto s : linear_extensions(p)) l.push_back(s);
  std::sort(l.begin(), l.end());
  std::vector<Permutation> expect{{1, 2, 3, 4, 5}, {1, 2, 4, 3, 5}, {1, 3, 2, 4, 5}, {2, 1, 3, 4, 5}, {2, 1, 4, 3, 5}};
  CHECK(l == expect);
  CHECK(l_star_alpha(p, {2, 3}) == std::vector<Permutation>{{1, 3, 2, 4, 5}});
  CHECK(l_star_alpha(p, {4, 1}).empty());
}

TEST_CASE("equivalences and chain congruences") {
  CHECK(all_equivalences(4).size() == 15);  // Bell number
  Poset c = chain(3);
  auto e = Equivalence::from_blocks(3, {{0, 2}});
  CHECK_FALSE(is_chain_congruence(c, e));
  auto closed = chain_congruence_closure(naturally_labeled(c), e);
  CHECK(closed.closed.blocks().size() == 1);
  CHECK(is_chain_congruence(c, Equivalence::from_blocks(3, {{0, 1}})));
  auto q = quotient(c, Equivalence::from_blocks(3, {{0, 1}}));
  CHECK(q.poset.size() == 2);
  CHECK(q.weights == std::vector<int>{2, 1});
}

TEST_CASE("orientation closure") {
  auto p = orientation_closure(3, {{0, 1}, {1, 2}, {0, 2}});
  REQUIRE(p.has_value());
  CHECK(*p == chain(3));
  CHECK_FALSE(orientation_closure(3, {{0, 1}, {1, 2}, {2, 0}}).has_value());
}

TEST_CASE("rooted trees up to isomorphism") {
  // 1, 1, 2, 4, 9, 20
  std::vector<std::size_t> counts{0, 1, 1, 2, 4, 9, 20};
  for (int n = 1; n <= 6; ++n) CHECK(rooted_tree_parents(n).size() == counts[static_cast<std::size_t>(n)]);
}

TEST_CASE("involution phi") {
  for (const Poset& p : all_posets(4)) {
    LabeledPoset lp = naturally_labeled(p);
    for (const Composition& a : compositions(4))
      for (const Permutation& s : l_alpha(lp, a)) {
        if (blocks_have_unique_minimum(lp, s, a)) continue;
        Permutation t = involution_phi(lp, a, s);
        CHECK(involution_phi(lp, a, t) == s);
        int ds = 0, dt = 0;
        for (int k : mask_elements(des_set(s)))
          if (!mask_has(a.set_mask(), k)) ++ds;
        for (int k : mask_elements(des_set(t)))
          if (!mask_has(a.set_mask(), k)) ++dt;
        CHECK(std::abs(ds - dt) == 1);
      }
  }
}
