#include <doctest.h>

#include "pdfl/errors.hpp"
#include "pdfl/model.hpp"
#include "test_util.hpp"

using namespace pdfl;

TEST_SUITE_BEGIN("model");

TEST_CASE("make_digraph accepts a well-formed graph") {
  const auto g = make_digraph({0.0, 0.0, 1.0}, {{0, 1, 1.0}, {1, 0, 2.0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(!g.clamped);
  CHECK(g.vertex_labels == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("antiparallel edge pairs are allowed, duplicates are not") {
  CHECK_NOTHROW(make_digraph({0, 0}, {{0, 1, 0}, {1, 0, 0}}));
  CHECK_THROWS_AS(make_digraph({0, 0}, {{0, 1, 0}, {0, 1, 1}}),
                  ValidationError);
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(make_digraph({}, {}), ValidationError);
  CHECK_THROWS_AS(make_digraph({0, 0}, {{0, 0, 0}}), ValidationError);
  CHECK_THROWS_AS(make_digraph({0, 0}, {{0, 2, 0}}), ValidationError);
  CHECK_THROWS_AS(make_digraph({0, 0}, {{-1, 1, 0}}), ValidationError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make_digraph({0, inf}, {}), ValidationError);
  CHECK_THROWS_AS(make_digraph({0, 0}, {{0, 1, inf}}), ValidationError);
  CHECK_THROWS_AS(make_digraph({0, NAN}, {}), ValidationError);
  CHECK_THROWS_AS(make_digraph({0.0}, std::vector<std::string>{"a", "b"}, {}),
                  ValidationError);
}

TEST_CASE("edge values are clamped up to their endpoints") {
  const auto g = make_digraph({0.0, 2.0}, {{0, 1, 1.0}});
  CHECK(g.edges[0].value == 2.0);
  CHECK(g.clamped);
  CHECK_THROWS_AS(make_digraph({0.0, 2.0}, std::vector<Edge>{{0, 1, 1.0}},
                               DigraphOptions{.strict = true}),
                  ValidationError);
}

TEST_CASE("sublevel keeps early vertices and edges, renumbered densely") {
  const auto g = make_digraph({0.0, 3.0, 1.0},
                              {{0, 2, 1.0}, {2, 1, 3.0}, {0, 1, 5.0}});
  const auto s = sublevel(g, 2.0);
  CHECK(s.vertex_count() == 2);
  CHECK(s.vertex_values == std::vector<double>{0.0, 1.0});
  CHECK(s.vertex_labels == std::vector<std::string>{"0", "2"});
  REQUIRE(s.edge_count() == 1);
  CHECK(s.edges[0].src == 0);
  CHECK(s.edges[0].dst == 1);

  CHECK(sublevel(g, -1.0).vertex_count() == 0);
  CHECK(sublevel(g, 5.0).edge_count() == 3);
  CHECK_THROWS_AS(sublevel(g, NAN), ValidationError);
}

TEST_CASE("filtration grid is sorted and unique") {
  const auto g = make_digraph({0.0, 3.0, 1.0},
                              {{0, 2, 1.0}, {2, 1, 3.0}, {0, 1, 5.0}});
  CHECK(filtration_grid(g) == std::vector<double>{0.0, 1.0, 3.0, 5.0});
}

TEST_CASE("fixture files parse into the expected graphs") {
  const auto g3 = testutil::load_flag("g3.flag");
  CHECK(g3.vertex_count() == 5);
  CHECK(g3.edge_count() == 7);
  CHECK(filtration_grid(g3) == std::vector<double>{0.0});

  const auto merging = testutil::load_flag("merging_components.flag");
  CHECK(merging.vertex_count() == 4);
  CHECK(merging.edge_count() == 2);
  CHECK(filtration_grid(merging) == std::vector<double>{0.0, 1.0, 2.0});
}

TEST_SUITE_END();
