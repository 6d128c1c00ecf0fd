#include <doctest.h>

#include "oracles/brute.hpp"
#include "qsymkit/io.hpp"
#include "qsymkit/unimodal.hpp"

using namespace qsym;
using namespace qsym::unimodal;

TEST_CASE("unimodal sets: enumeration, closed count, brute force") {
  for (int n = 1; n <= 8; ++n)
    for (const Composition& a : compositions(n)) {
      auto sets = enumerate_unimodal(a);
      CHECK(Integer(static_cast<long>(sets.size())) == count_unimodal(a));
      CHECK(static_cast<long>(sets.size()) == oracle::count_unimodal_sets(a.parts()));
      for (SubsetMask s = 0; s < (SubsetMask(1) << (n - 1)); ++s)
        CHECK(is_alpha_unimodal(s, a) == is_alpha_unimodal_local(s, a));
    }
}

TEST_CASE("V_alpha count") {
  for (int n = 1; n <= 7; ++n)
    for (const Composition& a : compositions(n)) CHECK(Integer(static_cast<long>(enumerate_v(a).size())) == count_v(a));
}

TEST_CASE("pair counts follow 4f(n-1) - f(n-2)") {
  std::vector<long> expect{0, 1, 4, 15, 56, 209, 780, 2911, 10864, 40545};
  for (int n = 1; n <= 9; ++n) {
    CHECK(unimodal_pair_count(n) == expect[static_cast<std::size_t>(n)]);
    CHECK(unimodal_pair_recursion(n) == expect[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("trivariate series") {
  for (int n = 1; n <= 7; ++n) CHECK(unimodal_series_coefficient(n) == unimodal_series_enumerated(n));
}

TEST_CASE("V is an order ideal but not a sublattice") {
  for (int n = 1; n <= 6; ++n)
    for (const Composition& a : compositions(n)) CHECK(is_order_ideal_of_refinement(enumerate_v(a), n));
  auto w = find_non_sublattice_witness(5);
  REQUIRE(w.has_value());
  auto v = enumerate_v(w->alpha);
  CHECK(std::find(v.begin(), v.end(), w->first) != v.end());
  CHECK(std::find(v.begin(), v.end(), w->second) != v.end());
  CHECK(std::find(v.begin(), v.end(), w->join) == v.end());
}

TEST_CASE("hook formula and the 2312 / 62 example") {
  Composition alpha{2, 3, 1, 2}, beta{6, 2};
  CHECK(cons_count(alpha, beta) == 336);
  CHECK(hook_forest(alpha, beta).hook_product() == 120);
  CHECK(is_consistent({4, 3, 8, 7, 5, 6, 2, 1, 9}, {1, 2, 1, 2, 3}, {3, 1, 5}));
  CHECK_FALSE(is_consistent({4, 3, 8, 7, 6, 5, 2, 1, 9}, {1, 2, 1, 2, 3}, {3, 1, 5}));
  CHECK_FALSE(is_consistent({4, 3, 8, 7, 5, 9, 2, 1, 6}, {1, 2, 1, 2, 3}, {3, 1, 5}));
  for (int n = 1; n <= 6; ++n)
    for (const Composition& b : compositions(n))
      for (const Composition& a : refinements(b)) {
        HookForest f = hook_forest(a, b);
        CHECK(cons_count(a, b) * f.hook_product() == oracle::factorial(n));
        CHECK(forest_labelings(f).size() == enumerate_cons(a, b).size());
      }
}

TEST_CASE("consistent permutations by definition") {
  // sigma in CONS(alpha, beta) iff every alpha block ends in its maximum and the
  // block maxima increase within each beta block.
  for (int n = 1; n <= 5; ++n)
    for (const Composition& b : compositions(n))
      for (const Composition& a : refinements(b)) {
        long brute = 0;
        for (const auto& s : oracle::permutations(n)) {
          bool ok = true;
          int pos = 0, bi = 0, filled = 0, last_max = 0;
          for (int part : a.parts()) {
            int mx = *std::max_element(s.begin() + pos, s.begin() + pos + part);
            if (s[static_cast<std::size_t>(pos + part - 1)] != mx) ok = false;
            if (filled > 0 && mx < last_max) ok = false;
            last_max = mx;
            pos += part;
            filled += part;
            if (filled == b[static_cast<std::size_t>(bi)]) {
              filled = 0;
              ++bi;
            }
          }
          if (ok) ++brute;
        }
        CHECK(cons_count(a, b) == brute);
      }
}

TEST_CASE("alternating sum") {
  for (int n = 1; n <= 5; ++n)
    for (const Composition& b : compositions(n))
      for (const Composition& g : compositions(n))
        CHECK(cons_alternating_sum(b, g) == (refines(b, g) ? oracle::factorial(n) : Integer(0)));
}

TEST_CASE("Moebius function of U_alpha") {
  // mu(empty, S) by the recursive definition over the subsets of S in U_alpha.
  for (int n = 1; n <= 5; ++n)
    for (const Composition& a : compositions(n)) {
      auto sets = enumerate_unimodal(a);
      std::map<SubsetMask, int> mu;
      std::sort(sets.begin(), sets.end(), [](SubsetMask x, SubsetMask y) { return mask_size(x) < mask_size(y); });
      for (SubsetMask s : sets) {
        int total = 0;
        for (SubsetMask t : sets)
          if (t != s && (t & s) == t) total += mu[t];
        mu[s] = s == 0 ? 1 : -total;
        CHECK(moebius_unimodal(a, s) == mu[s]);
      }
    }
}
