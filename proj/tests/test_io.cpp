#include <doctest.h>

#include "qsymkit/error.hpp"
#include "qsymkit/io.hpp"

using namespace qsym;
using io::Json;

TEST_CASE("text form round trips") {
  for (const char* text : {"4/3*q^2*Psi[2,3,1] - Psi[1,1,1,1,1,1]", "F[3] - F[1,2]", "(1 + q)*M[2,1]",
                           "7*s[4] + 7*s[3,1] + s[2,2] + 2*s[2,1,1]", "-3*p[2,2,2]/z", "0"}) {
    io::AnyElement e = io::parse_element_text(text);
    CHECK(io::parse_element_text(io::to_text(e)) == e);
    CHECK(io::parse_element_text(io::to_text(e, View::ZNormalized)) == e);
  }
  CHECK(io::to_text(io::parse_element_text("7*s[4] + s[2,2] + 7*s[3,1] + 2*s[2,1,1]")) ==
        "7*s[4] + 7*s[3,1] + s[2,2] + 2*s[2,1,1]");
}

TEST_CASE("z-normalised text") {
  // Psi[2,1]/z has z = 2
  auto e = std::get<QSymElement>(io::parse_element_text("Psi[2,1]/z"));
  CHECK(e.coeff({2, 1}) == ParamPoly(Rational(1, 2)));
  CHECK(io::to_text(e, View::ZNormalized) == "Psi[2,1]/z");
  CHECK_THROWS_AS(io::parse_element_text("F[2,1]/z"), ParseError);
}

TEST_CASE("JSON element round trip and the set form") {
  auto e = std::get<QSymElement>(io::parse_element_text("(2 + q)*F[2,1] - 1/2*F[3]"));
  CHECK(std::get<QSymElement>(io::element_from_json(io::to_json(e))).identical(e));
  Json j = Json::parse(R"({"basis":"F","degree":3,"terms":[{"set":[2],"coeff":1}]})");
  CHECK(io::qsym_from_json(j).identical(QSymElement::single(Basis::Fundamental, {2, 1})));
  Json big = io::to_json(QSymElement::single(Basis::Monomial, {1}, ParamPoly(Rational(Integer("123456789012345678901234567890")))));
  CHECK(io::qsym_from_json(big).coeff({1}).constant() == Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("JSON validation errors") {
  CHECK_THROWS_AS(io::element_from_json(Json::parse(R"({"basis":"Q","degree":1,"terms":[]})")), InvalidArgument);
  CHECK_THROWS_AS(io::element_from_json(Json::parse(R"({"basis":"M","degree":3,"terms":[{"index":[1,1],"coeff":1}]})")),
                  InvalidArgument);
  try {
    io::parse_json("{\n  \"n\": 3,\n  oops\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("posets, graphs, equivalences") {
  auto p = io::poset_from_json(Json::parse(R"({"n":3,"covers":[[1,2],[2,3]]})"));
  CHECK(p.poset() == posets::chain(3));
  CHECK(p.labels() == std::vector<int>{1, 2, 3});
  CHECK(io::poset_from_json(io::to_json(p)).labels() == p.labels());
  CHECK_THROWS_AS(io::poset_from_json(Json::parse(R"({"n":2,"covers":[[1,2],[2,1]]})")), InvalidArgument);
  CHECK_THROWS_AS(io::poset_from_json(Json::parse(R"({"n":2,"covers":[[1,3]]})")), InvalidArgument);

  auto g = io::graph_from_json(Json::parse(R"({"n":3,"edges":[[1,2],[1,2],[2,3]]})"));
  CHECK(g.edges.size() == 3);
  CHECK(io::edge_subset_from_json(Json::parse(R"([[1,2],[1,2]])"), g) == std::vector<int>{0, 1});
  CHECK_THROWS(io::edge_subset_from_json(Json::parse(R"([[3,1]])"), g));

  auto e = io::equivalence_from_json(Json::parse(R"({"blocks":[[1,3]]})"), 4);
  CHECK(e.blocks().size() == 3);
  CHECK(e.same(0, 2));
  CHECK_THROWS(io::equivalence_from_json(Json::parse(R"({"blocks":[[1,3],[3]]})"), 4));

  auto m = io::matroid_from_json(Json::parse(R"({"n":3,"bases":[[1,2],[1,3],[2,3]]})"));
  CHECK(m.rank() == 2);
}

TEST_CASE("small helpers") {
  CHECK(io::parse_int_list("1,0,2") == std::vector<int>{1, 0, 2});
  CHECK_THROWS(io::parse_int_list("1,,2"));
  CHECK(io::hex64(io::fnv1a("")) == "cbf29ce484222325");
  CHECK(io::hex64(io::fnv1a("a")) == "af63dc4c8601ec8c");
}
