#include <doctest.h>

#include <random>
#include <stdexcept>

#include "linecrit/digraph.hpp"
#include "linecrit/errors.hpp"
#include "test_util.hpp"

using namespace linecrit;
using namespace testutil;

TEST_CASE("degrees count loops and parallel edges once each") {
  const Multidigraph g(2, {{0, 0}, {0, 1}, {0, 1}});
  CHECK(g.out_degree(0) == 3);
  CHECK(g.in_degree(0) == 1);
  CHECK(g.in_degree(1) == 2);
  CHECK(g.out_degree(1) == 0);
  CHECK_THROWS_AS(g.out_degree(2), std::invalid_argument);
  CHECK_THROWS_AS(Multidigraph(1, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Multidigraph(-1), std::invalid_argument);
}

TEST_CASE("line graph of the triangle") {
  const Multidigraph lg = line_graph(triangle());
  REQUIRE(lg.vertex_count() == 6);
  const std::vector<Edge> expected = {{0, 2}, {0, 3}, {1, 4}, {1, 5},
                                      {2, 0}, {2, 1}, {3, 4}, {3, 5},
                                      {4, 0}, {4, 1}, {5, 2}, {5, 3}};
  CHECK(lg.edges() == expected);
}

TEST_CASE("line graph edge count and regularity") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const Multidigraph g = random_graph(rng, 6, 12);
    const Multidigraph lg = line_graph(g);
    REQUIRE(lg.vertex_count() == g.edge_count());
    long long expected = 0;
    for (const Edge& e : g.edges()) expected += g.out_degree(e.head);
    REQUIRE(lg.edge_count() == expected);
    // Vertex e of the line graph has the out-degree of head(e).
    for (int e = 0; e < g.edge_count(); ++e)
      REQUIRE(lg.out_degree(e) == g.out_degree(g.edge(e).head));
  }
}

TEST_CASE("line graph of a k-out-regular graph is k-out-regular") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_k_out_regular(5, 3, seed);
    const auto k = is_k_out_regular(inst.graph);
    REQUIRE(k.has_value());
    REQUIRE(*k == 3);
    const auto lk = is_k_out_regular(line_graph(inst.graph));
    REQUIRE(lk.has_value());
    REQUIRE(*lk == 3);
  }
}

TEST_CASE("out-regularity detection") {
  CHECK(is_k_out_regular(triangle()) == 2);
  CHECK(is_k_out_regular(two_cycle()) == 1);
  CHECK_FALSE(is_k_out_regular(Multidigraph(2, {{0, 1}})).has_value());
  CHECK(is_k_out_regular(Multidigraph(3)) == 0);
  CHECK_THROWS_AS(is_k_out_regular(Multidigraph(0)), std::invalid_argument);
}

TEST_CASE("base points") {
  const Multidigraph g = triangle();
  const BasePoint bp = BasePoint::at_edge(g, 3);
  CHECK(bp.sink == 1);
  CHECK(bp.base_edge == 3);
  CHECK(bp.target == 2);
  CHECK(base_point_valid(g, bp));
  CHECK_FALSE(base_point_valid(g, {0, 0, 2}));
  CHECK_FALSE(base_point_valid(g, {0, -1, 1}));
  CHECK_FALSE(base_point_valid(g, {0, 6, 1}));
  CHECK_THROWS_AS(BasePoint::at_edge(g, 6), std::invalid_argument);
}

TEST_CASE("hypothesis check") {
  const Multidigraph g = triangle();
  const HypothesisCheck ok = check_hypotheses(g, BasePoint::at_edge(g, 0));
  CHECK(ok.ok);
  CHECK(ok.reasons.empty());

  // Two-cycle: the target has in-degree 1.
  const Multidigraph c = two_cycle();
  const HypothesisCheck bad = check_hypotheses(c, BasePoint::at_edge(c, 0));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.reasons.size() == 1);
  CHECK(bad.reasons[0].find("target vertex 1") != std::string::npos);

  // Isolated vertex: in-degree 0 is reported per vertex.
  const Multidigraph iso(3, {{0, 1}, {1, 0}, {2, 1}});
  const HypothesisCheck miss =
      check_hypotheses(iso, BasePoint::at_edge(iso, 0));
  CHECK_FALSE(miss.ok);
  REQUIRE(miss.reasons.size() == 1);
  CHECK(miss.reasons[0].find("vertex 2") != std::string::npos);

  CHECK_THROWS_AS(check_hypotheses(g, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("reverse reachability") {
  const Multidigraph g = triangle();
  for (int v = 0; v < 3; ++v) {
    const auto reach = reachable_to(g, v);
    CHECK(reach == std::vector<bool>{true, true, true});
  }
  const Multidigraph split(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(reachable_to(split, 0) == std::vector<bool>{true, true, false, false});
  CHECK(reachable_to(split, 3) == std::vector<bool>{false, false, true, true});
  CHECK_THROWS_AS(reachable_to(split, 4), std::invalid_argument);
}

TEST_CASE("random regular instances are deterministic and admissible") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_k_out_regular(6, 2, seed);
    const auto b = random_k_out_regular(6, 2, seed);
    REQUIRE(a.graph.edges() == b.graph.edges());
    REQUIRE(a.base.base_edge == b.base.base_edge);

    REQUIRE(is_k_out_regular(a.graph) == 2);
    for (int v = 0; v < a.graph.vertex_count(); ++v)
      REQUIRE(a.graph.in_degree(v) >= 1);
    REQUIRE(base_point_valid(a.graph, a.base));
    REQUIRE(check_hypotheses(a.graph, a.base).ok);
    // The base edge is the first eligible one.
    for (int e = 0; e < a.base.base_edge; ++e)
      REQUIRE(a.graph.in_degree(a.graph.edge(e).head) < 2);
  }
  CHECK(random_k_out_regular(6, 2, 1).graph.edges() !=
        random_k_out_regular(6, 2, 2).graph.edges());
}

TEST_CASE("random regular instance argument checks") {
  CHECK_THROWS_AS(random_k_out_regular(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_k_out_regular(4, 1, 0), std::invalid_argument);
}
