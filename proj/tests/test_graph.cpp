#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skc/errors.hpp"
#include "skc/graph.hpp"
#include "skc/partition.hpp"
#include "testutil.hpp"

using skc::DataError;
using skc::Graph;
using skc::Partition;
using skc::UsageError;

TEST_CASE("construction normalizes and validates edges") {
  Graph g(4, {{3, 1}, {0, 1}, {2, 0}});
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  // stored canonically: u < v, sorted
  REQUIRE(g.edges().size() == 3);
  CHECK(g.edges()[0] == std::pair<int, int>{0, 1});
  CHECK(g.edges()[1] == std::pair<int, int>{0, 2});
  CHECK(g.edges()[2] == std::pair<int, int>{1, 3});

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), DataError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DataError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), DataError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DataError);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), DataError);
  CHECK_THROWS_AS(Graph(-1, {}), UsageError);
  CHECK_NOTHROW(Graph(0, {}));
  CHECK_NOTHROW(Graph(5, {}));
}

TEST_CASE("degrees, volume and the handshake identity") {
  Graph g = testutil::petersen();
  for (int u = 0; u < 10; ++u) CHECK(g.degree(u) == 3);
  CHECK(g.max_degree() == 3);
  CHECK(g.min_degree() == 3);
  CHECK(g.total_volume() == 2 * g.num_edges());
  CHECK(g.volume({0, 1, 2}) == 9);
  CHECK_THROWS_AS(g.volume({10}), UsageError);

  Graph p = testutil::path(5);
  CHECK(p.degree(0) == 1);
  CHECK(p.degree(2) == 2);
  CHECK(p.max_degree() == 2);
  CHECK(p.min_degree() == 1);
  long long sum = 0;
  for (int u = 0; u < 5; ++u) sum += p.degree(u);
  CHECK(sum == 2 * p.num_edges());
}

TEST_CASE("adjacency queries") {
  Graph g = testutil::two_triangles_bridge();
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(0, 3));
  CHECK(!g.has_edge(0, 0));
  CHECK(!g.has_edge(0, 6));
  CHECK(g.neighbors(2) == std::vector<int>{0, 1, 3});
  CHECK(g.neighbors(3) == std::vector<int>{2, 4, 5});
}

TEST_CASE("component counting") {
  CHECK(testutil::two_triangles().component_count() == 2);
  CHECK(testutil::two_triangles_bridge().component_count() == 1);
  CHECK(testutil::two_triangles_bridge().connected());
  CHECK(!testutil::two_triangles().connected());
  CHECK(Graph(3, {}).component_count() == 3);
  CHECK(!Graph(0, {}).connected());
  CHECK(testutil::cycle(7).connected());
}

TEST_CASE("induced subgraph relabels and keeps inner edges only") {
  Graph k4 = testutil::complete(4);
  auto sub = skc::induced_subgraph(k4, {0, 2, 3});
  CHECK(sub.graph.num_vertices() == 3);
  CHECK(sub.graph.num_edges() == 3);  // K3
  CHECK(sub.vertex_map == std::vector<int>{0, 2, 3});

  Graph p4 = testutil::path(4);
  auto ends = skc::induced_subgraph(p4, {0, 2});
  CHECK(ends.graph.num_vertices() == 2);
  CHECK(ends.graph.num_edges() == 0);

  // order of the input subset does not matter
  auto sub2 = skc::induced_subgraph(k4, {3, 0, 2});
  CHECK(sub2.vertex_map == sub.vertex_map);
  CHECK(sub2.graph.edges() == sub.graph.edges());

  CHECK_THROWS_AS(skc::induced_subgraph(k4, {}), UsageError);
  CHECK_THROWS_AS(skc::induced_subgraph(k4, {1, 1}), UsageError);
  CHECK_THROWS_AS(skc::induced_subgraph(k4, {4}), UsageError);
}

TEST_CASE("induced subgraph of a bridge graph cluster") {
  Graph g = testutil::two_triangles_bridge();
  auto sub = skc::induced_subgraph(g, {3, 4, 5});
  CHECK(sub.graph.num_edges() == 3);
  CHECK(sub.graph.degree(0) == 2);  // the bridge endpoint loses its bridge
}

TEST_CASE("partition from labels") {
  auto p = Partition::from_labels({0, 1, 1, 2, 0});
  CHECK(p.k == 3);
  CHECK(p.n() == 5);
  CHECK(p.cluster_sizes() == std::vector<int>{2, 2, 1});
  auto cl = p.clusters();
  REQUIRE(cl.size() == 3);
  CHECK(cl[0] == std::vector<int>{0, 4});
  CHECK(cl[1] == std::vector<int>{1, 2});
  CHECK(cl[2] == std::vector<int>{3});
  CHECK(!p.has_empty_cluster());

  CHECK_THROWS_AS(Partition::from_labels({}), UsageError);
  CHECK_THROWS_AS(Partition::from_labels({0, -1}), DataError);
}

TEST_CASE("partition validation and empty clusters") {
  Partition p;
  p.k = 4;
  p.labels = {0, 0, 3, 3};
  CHECK_NOTHROW(p.validate());
  CHECK(p.has_empty_cluster());
  CHECK(p.cluster_sizes() == std::vector<int>{2, 0, 0, 2});

  Partition bad;
  bad.k = 2;
  bad.labels = {0, 2};
  CHECK_THROWS_AS(bad.validate(), DataError);
}
