#include <doctest.h>

#include "qsymkit/error.hpp"
#include "qsymkit/families.hpp"
#include "qsymkit/search.hpp"
#include "qsymkit/verify.hpp"

using namespace qsym;

TEST_CASE("kernel of a small matrix") {
  std::vector<std::vector<Rational>> rows{{1, 1, 0}, {0, 0, 1}};
  auto k = search::kernel(rows, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{-1, 1, 0});
}

TEST_CASE("the counterexample combinations") {
  auto ps = families::counterexample_posets();
  std::vector<posets::Poset> v(ps.begin(), ps.end());
  auto first = search::analyse(v, {2, 3, 2, 0});
  REQUIRE(first.symmetric);
  CHECK(first.s->to_string() == "7*s[4] + 7*s[3,1] + s[2,2] + 2*s[2,1,1]");
  CHECK(first.h->to_string() == "2*h[4] + 4*h[3,1] - h[2,2] + 2*h[2,1,1]");
  CHECK(first.schur_positive);
  CHECK_FALSE(first.h_positive);

  CHECK_FALSE(search::analyse(v, {1, 3, 1, 3}).symmetric);
  v[1] = ps[3].dual();
  auto second = search::analyse(v, {1, 3, 1, 3});
  REQUIRE(second.symmetric);
  CHECK(second.s->to_string() == "8*s[4] + 5*s[3,1] - s[2,2] + s[2,1,1]");
  CHECK_FALSE(second.schur_positive);
  CHECK(second.p_positive);
}

TEST_CASE("search is deterministic in the seed and finds h-negative combinations") {
  auto a = search::search_positivity(4, 300, 11);
  auto b = search::search_positivity(4, 300, 11);
  REQUIRE(a.symmetric.size() == b.symmetric.size());
  for (std::size_t i = 0; i < a.symmetric.size(); ++i) {
    CHECK(a.symmetric[i].coeffs == b.symmetric[i].coeffs);
    CHECK(a.symmetric[i].posets == b.symmetric[i].posets);
  }
  CHECK(a.flagged == b.flagged);
  CHECK_FALSE(a.flagged.empty());
  for (const auto& c : a.symmetric) CHECK(c.p_positive);
}

TEST_CASE("verify suites at small sizes") {
  for (const auto& name : verify::suite_names()) {
    verify::Options opt;
    opt.n = name == "families" || name == "kpe" || name == "kp" ? 3 : 4;
    auto checks = verify::run_suite(name, opt);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.status != verify::Status::Fail);
      if (c.status != verify::Status::Pass) CHECK_FALSE(c.witness.is_null());
    }
  }
  CHECK_THROWS_AS(verify::run_suite("nope", {}), InvalidArgument);
  verify::Options bad;
  bad.n = 40;
  CHECK_THROWS_AS(verify::run_suite("cons", bad), InvalidArgument);
}

TEST_CASE("parallel runs keep the job order") {
  std::vector<std::function<verify::Check()>> jobs;
  for (int i = 0; i < 20; ++i) jobs.push_back([i] { return verify::Check{std::to_string(i), verify::Status::Pass, "", {}}; });
  auto out = verify::run_parallel(jobs, 4);
  for (int i = 0; i < 20; ++i) CHECK(out[static_cast<std::size_t>(i)].name == std::to_string(i));
  verify::Options one, four;
  one.n = four.n = 3;
  four.threads = 4;
  auto a = verify::run_suite("bases", one), b = verify::run_suite("bases", four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].name == b[i].name);
}
