#include "doctest.h"

#include "corpus.hpp"
#include "strata/io.hpp"

using namespace strata;

TEST_CASE("complex documents round-trip exactly") {
  for (const simplicial_complex& K :
       {corpus::pinched_cylinder(), corpus::torus_grid(), simplicial_complex()}) {
    const std::string text = write_document(json_of(K));
    CHECK(complex_from_json(parse_document(text)) == K);
    CHECK(write_document(json_of(complex_from_json(parse_document(text)))) == text);
  }
}

TEST_CASE("heights parse from strings and integral numbers") {
  const json doc = {
      {"vertices",
       {{{"id", 0}, {"height", "-3/4"}}, {{"id", 1}, {"height", "0.25"}}, {{"id", 2}, {"height", 7}}}},
      {"simplices", {{0, 1}, {1, 2}}}};
  simplicial_complex K = complex_from_json(doc);
  CHECK(K.height(0) == rational(-3, 4));
  CHECK(K.height(1) == rational(1, 4));
  CHECK(K.height(2) == rational(7));
  // face closure on load: the two edges imply their vertices
  CHECK(K.simplex_count() == 5);
}

TEST_CASE("malformed complex documents are rejected") {
  CHECK_THROWS_AS(parse_document("{not json"), parse_error);
  CHECK_THROWS_AS(complex_from_json(json::array()), parse_error);
  CHECK_THROWS_AS(complex_from_json({{"vertices", json::array()}}), parse_error);

  const auto vertices = [](json vs) {
    return json{{"vertices", std::move(vs)}, {"simplices", json::array()}};
  };
  CHECK_THROWS_AS(complex_from_json(vertices({{{"id", 0}, {"height", 0.5}}})), parse_error);
  CHECK_THROWS_AS(complex_from_json(vertices({{{"id", 0}, {"height", "1/0"}}})), parse_error);
  CHECK_THROWS_AS(complex_from_json(vertices({{{"id", 0}, {"height", "abc"}}})), parse_error);
  CHECK_THROWS_AS(complex_from_json(vertices({{{"id", -2}, {"height", "0"}}})), parse_error);
  CHECK_THROWS_AS(complex_from_json(vertices({{{"id", 0}, {"height", "0"}},
                                              {{"id", 0}, {"height", "1"}}})),
                  parse_error);
  CHECK_THROWS_AS(complex_from_json(vertices({{{"height", "0"}}})), parse_error);

  // simplex naming a vertex that was never declared
  CHECK_THROWS_AS(complex_from_json({{"vertices", {{{"id", 0}, {"height", "0"}}}},
                                     {"simplices", {{0, 3}}}}),
                  parse_error);
  CHECK_THROWS_AS(complex_from_json({{"vertices", {{{"id", 0}, {"height", "0"}}}},
                                     {"simplices", {"zero"}}}),
                  parse_error);
}

TEST_CASE("filtration documents round-trip and validate") {
  std::mt19937 rng(48109);
  filtration F = corpus::random_filtration(rng, 8, 4);
  const std::string text = write_document(json_of(F));
  filtration back = filtration_from_json(parse_document(text));
  CHECK(back.stages() == F.stages());
  CHECK(back.indices() == F.indices());

  json doc = json_of(F);
  doc["indices"].push_back("99");
  CHECK_THROWS_AS(filtration_from_json(doc), parse_error);

  // stages that are not nested get through parsing and fail validation
  const json point_a = {{"vertices", {{{"id", 0}, {"height", "0"}}}}, {"simplices", json::array()}};
  const json point_b = {{"vertices", {{{"id", 1}, {"height", "0"}}}}, {"simplices", json::array()}};
  CHECK_THROWS_AS(
      filtration_from_json({{"stages", {point_a, point_b}}, {"indices", {"0", "1"}}}),
      not_a_filtration);
}

TEST_CASE("matrices and barcodes serialize with exact entries") {
  const field F0 = field::rationals();
  matrix m(F0, 2, 2);
  m.set(0, 0, rational(1, 3));
  m.set(0, 1, rational(-2));
  m.set(1, 1, rational(5, 2));
  const json doc = json_of(m);
  CHECK(doc["rows"] == 2);
  CHECK(doc["cols"] == 2);
  CHECK(doc["entries"] ==
        json::array({json::array({"1/3", "-2"}), json::array({"0", "5/2"})}));

  barcode b{1, {{0, 2, 1}, {1, 1, 2}}};
  const json bars = json_of(b);
  REQUIRE(bars.size() == 2);
  CHECK(bars[0] == json({{"degree", 1}, {"birth_index", 0}, {"death_index", 2}, {"multiplicity", 1}}));
  CHECK(bars[1]["multiplicity"] == 2);
}
