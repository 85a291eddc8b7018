#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "zdp/errors.hpp"
#include "zdp/numtheory.hpp"
#include "zdp/zdg.hpp"

using namespace zdp;

namespace {

std::set<std::pair<std::uint64_t, std::uint64_t>> explicit_edges(
    const ExplicitGraph& g) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) edges.emplace(g.vertices[i], g.vertices[j]);
  return edges;
}

bool is_composite(std::uint64_t n) {
  const auto f = factorize(n);
  return !(f.factors.size() == 1 && f.factors[0].exponent == 1);
}

}  // namespace

TEST_CASE("class graph of Z_75") {
  const ClassGraph cg = build_class_graph(75);
  REQUIRE(cg.size() == 4);
  CHECK(cg.classes[0].divisor == 3);
  CHECK(cg.classes[0].size == 20);
  CHECK_FALSE(cg.classes[0].is_clique);
  CHECK(cg.classes[1].divisor == 5);
  CHECK(cg.classes[1].size == 8);
  CHECK_FALSE(cg.classes[1].is_clique);
  CHECK(cg.classes[2].divisor == 15);
  CHECK(cg.classes[2].size == 4);
  CHECK(cg.classes[2].is_clique);
  CHECK(cg.classes[3].divisor == 25);
  CHECK(cg.classes[3].size == 2);
  CHECK_FALSE(cg.classes[3].is_clique);
  // edges 3-25, 5-15, 15-25 and nothing else
  CHECK(cg.adjacent(0, 3));
  CHECK(cg.adjacent(1, 2));
  CHECK(cg.adjacent(2, 3));
  CHECK_FALSE(cg.adjacent(0, 1));
  CHECK_FALSE(cg.adjacent(0, 2));
  CHECK_FALSE(cg.adjacent(1, 3));
  CHECK(cg.vertex_count() == 34);
}

TEST_CASE("class graph of Z_12") {
  const ClassGraph cg = build_class_graph(12);
  REQUIRE(cg.size() == 4);  // divisors 2, 3, 4, 6
  CHECK(cg.classes[0].size == 2);
  CHECK(cg.classes[1].size == 2);
  CHECK(cg.classes[2].size == 2);
  CHECK(cg.classes[3].size == 1);
  CHECK(cg.classes[3].is_clique);
  CHECK_FALSE(cg.classes[0].is_clique);
  CHECK_FALSE(cg.classes[1].is_clique);
  CHECK_FALSE(cg.classes[2].is_clique);
  CHECK(cg.adjacent(0, 3));   // 2-6
  CHECK(cg.adjacent(1, 2));   // 3-4
  CHECK(cg.adjacent(2, 3));   // 4-6
  CHECK_FALSE(cg.adjacent(0, 1));
  CHECK_FALSE(cg.adjacent(0, 2));
  CHECK_FALSE(cg.adjacent(1, 3));
}

TEST_CASE("class graph of Z_4") {
  const ClassGraph cg = build_class_graph(4);
  REQUIRE(cg.size() == 1);
  CHECK(cg.classes[0].divisor == 2);
  CHECK(cg.classes[0].size == 1);
  CHECK(cg.classes[0].is_clique);
}

TEST_CASE("empty graph and range errors") {
  CHECK_THROWS_AS(build_class_graph(7), EmptyGraphError);
  CHECK_THROWS_AS(build_class_graph(2), EmptyGraphError);
  CHECK_THROWS_AS(build_class_graph(3), EmptyGraphError);
  CHECK_THROWS_AS(build_class_graph(1), RangeError);
}

TEST_CASE("explicit graph of Z_6") {
  const ExplicitGraph g = expand_graph(build_class_graph(6));
  CHECK(g.vertices == std::vector<std::uint64_t>{2, 3, 4});
  CHECK(explicit_edges(g) ==
        std::set<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}, {3, 4}});
}

TEST_CASE("explicit graph of Z_8") {
  const ExplicitGraph g = expand_graph(build_class_graph(8));
  CHECK(g.vertices == std::vector<std::uint64_t>{2, 4, 6});
  CHECK(explicit_edges(g) ==
        std::set<std::pair<std::uint64_t, std::uint64_t>>{{2, 4}, {4, 6}});
}

TEST_CASE("explicit graph of Z_12") {
  const ExplicitGraph g = expand_graph(build_class_graph(12));
  REQUIRE(g.size() == 7);
  std::set<std::uint64_t> nbrs_of_6;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t i =
        std::find(g.vertices.begin(), g.vertices.end(), 6) - g.vertices.begin();
    if (g.adjacent(i, j)) nbrs_of_6.insert(g.vertices[j]);
  }
  CHECK(nbrs_of_6 == std::set<std::uint64_t>{2, 4, 8, 10});
}

TEST_CASE("vertex cap") {
  const ClassGraph cg = build_class_graph(75);
  CHECK_THROWS_AS(expand_graph(cg, 10), SizeCapError);
  CHECK_NOTHROW(expand_graph(cg, 34));
}

TEST_CASE("expanded edges match the definition scan up to 300") {
  for (std::uint64_t n = 4; n <= 300; ++n) {
    if (!is_composite(n)) continue;
    const ExplicitGraph g = expand_graph(build_class_graph(n));
    const auto scanned = oracle::edges_by_definition(n);
    REQUIRE(explicit_edges(g) ==
            std::set<std::pair<std::uint64_t, std::uint64_t>>(scanned.begin(),
                                                              scanned.end()));
  }
}

TEST_CASE("class structure within and across classes up to 300") {
  for (std::uint64_t n = 4; n <= 300; ++n) {
    if (!is_composite(n)) continue;
    const ClassGraph cg = build_class_graph(n);
    const ExplicitGraph g = expand_graph(cg);
    REQUIRE(cg.vertex_count() == g.size());

    // group explicit vertices by class
    std::vector<std::vector<std::size_t>> members(cg.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      members[g.class_index[i]].push_back(i);
    for (std::size_t c = 0; c < cg.size(); ++c)
      REQUIRE(members[c].size() == cg.classes[c].size);

    // within a class: complete iff clique flag, edgeless otherwise
    for (std::size_t c = 0; c < cg.size(); ++c) {
      for (std::size_t a = 0; a < members[c].size(); ++a)
        for (std::size_t b = a + 1; b < members[c].size(); ++b)
          REQUIRE(g.adjacent(members[c][a], members[c][b]) ==
                  cg.classes[c].is_clique);
    }
    // across classes: all pairs or none
    for (std::size_t c = 0; c < cg.size(); ++c) {
      for (std::size_t d = c + 1; d < cg.size(); ++d) {
        const bool expected = cg.adjacent(c, d);
        for (const std::size_t a : members[c])
          for (const std::size_t b : members[d])
            REQUIRE(g.adjacent(a, b) == expected);
      }
    }
  }
}

TEST_CASE("dot emission") {
  const ClassGraph cg = build_class_graph(75);
  const std::string dot = to_dot(cg);
  CHECK(dot.find("graph class_graph_75") != std::string::npos);
  CHECK(dot.find("d3 -- d25;") != std::string::npos);
  CHECK(dot.find("d5 -- d15;") != std::string::npos);
  const std::string vdot = to_dot(expand_graph(build_class_graph(6)));
  CHECK(vdot.find("v2 -- v3;") != std::string::npos);
  CHECK(vdot.find("v3 -- v4;") != std::string::npos);
}
