#include <doctest.h>

#include <algorithm>
#include <set>

#include "bcube/topology.hpp"

using namespace bcube;

namespace {

NodeId at(const BCube& bc, const char* s) { return bc.parse(s); }

int digit_distance(const BCube& bc, NodeId a, NodeId b) {
  int d = 0;
  for (int i = 0; i < bc.dimensions(); ++i) d += bc.digit(a, i) != bc.digit(b, i);
  return d;
}

}  // namespace

TEST_CASE("node and edge counts") {
  CHECK(node_count({3, 1}) == 9);
  CHECK(node_count({2, 0}) == 2);
  CHECK(node_count({4, 2}) == 64);
  CHECK(edge_count({3, 1}) == 18);
  CHECK(edge_count({2, 0}) == 1);
  CHECK(edge_count({4, 1}) == 48);

  // Brute force over all pairs.
  for (Dims d : {Dims{2, 0}, Dims{3, 1}, Dims{4, 1}, Dims{3, 2}}) {
    BCube bc(d);
    std::uint64_t pairs = 0;
    for (std::uint32_t a = 0; a < bc.node_count(); ++a)
      for (std::uint32_t b = a + 1; b < bc.node_count(); ++b) pairs += digit_distance(bc, {a}, {b}) == 1;
    CHECK(pairs == bc.edge_count());
    CHECK(bc.edges().size() == bc.edge_count());
  }
}

TEST_CASE("node strings") {
  BCube bc({3, 1});
  CHECK(bc.format(NodeId{0}) == "00");
  CHECK(bc.format(NodeId{5}) == "12");
  CHECK(bc.parse("21").code == 7);
  CHECK_THROWS_AS(bc.parse("2"), std::invalid_argument);
  CHECK_THROWS_AS(bc.parse("a1"), std::invalid_argument);
  CHECK_THROWS_AS(bc.parse("31"), std::invalid_argument);

  BCube wide({12, 1});
  const NodeId u = wide.from_digits(std::vector<int>{11, 3});
  CHECK(wide.format(u) == "11,3");
  CHECK(wide.parse("11,3") == u);
  for (std::uint32_t c = 0; c < wide.node_count(); ++c) CHECK(wide.parse(wide.format({c})).code == c);
}

TEST_CASE("adjacency") {
  BCube bc({3, 1});
  CHECK(bc.are_adjacent(at(bc, "00"), at(bc, "10")));
  CHECK_FALSE(bc.are_adjacent(at(bc, "00"), at(bc, "00")));
  CHECK_FALSE(bc.are_adjacent(at(bc, "00"), at(bc, "11")));
  CHECK_THROWS_AS(bc.are_adjacent(NodeId{0}, NodeId{9}), std::out_of_range);
  CHECK(bc.edge_dimension(at(bc, "00"), at(bc, "02")) == 0);
  CHECK(bc.edge_dimension(at(bc, "00"), at(bc, "20")) == 1);
  CHECK(bc.edge_dimension(at(bc, "00"), at(bc, "11")) == -1);
  CHECK_THROWS_AS(bc.edge(at(bc, "00"), at(bc, "11")), std::invalid_argument);

  const Edge e = bc.edge(at(bc, "20"), at(bc, "00"));
  CHECK(e.u == at(bc, "00"));
  CHECK(e.v == at(bc, "20"));
  CHECK(e.dim == 1);
}

TEST_CASE("regularity and neighbour lists") {
  for (Dims d : {Dims{3, 1}, Dims{4, 2}, Dims{5, 0}}) {
    BCube bc(d);
    for (std::uint32_t c = 0; c < bc.node_count(); ++c) {
      const auto nb = bc.neighbors({c});
      CHECK(nb.size() == static_cast<std::size_t>((d.n - 1) * (d.k + 1)));
      for (NodeId v : nb) CHECK(digit_distance(bc, {c}, v) == 1);
    }
  }
}

TEST_CASE("dimension edges partition the edge set") {
  BCube bc({3, 1});
  const auto e0 = bc.dimension_edges(0);
  CHECK(e0.size() == 9);
  for (const Edge& e : e0) CHECK(bc.digit(e.u, 1) == bc.digit(e.v, 1));  // inside the triangles
  CHECK(BCube({4, 1}).dimension_edges(1).size() == 24);
  const auto k2 = BCube({2, 0}).dimension_edges(0);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].u.code == 0);
  CHECK(k2[0].v.code == 1);
  CHECK_THROWS(bc.dimension_edges(2));

  BCube big({4, 2});
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::size_t total = 0;
  for (int i = 0; i <= 2; ++i) {
    for (const Edge& e : big.dimension_edges(i)) {
      CHECK(e.dim == i);
      seen.insert({e.u.code, e.v.code});
      ++total;
    }
  }
  CHECK(total == big.edge_count());
  CHECK(seen.size() == total);
}

TEST_CASE("cross neighbours and cross edges") {
  BCube bc({3, 1});
  CHECK(bc.cross_neighbor(at(bc, "00"), 1, 2) == at(bc, "20"));
  CHECK(bc.cross_neighbor(at(bc, "01"), 1, 1) == at(bc, "11"));
  CHECK_THROWS(bc.cross_neighbor(at(bc, "01"), 1, 0));
  CHECK_THROWS(bc.cross_neighbor(at(bc, "01"), 1, 3));

  BCube b42({4, 2});
  const NodeId u = at(b42, "321");
  const NodeId v = b42.cross_neighbor(u, 2, 0);
  CHECK(v == at(b42, "021"));
  CHECK(b42.are_adjacent(u, v));
  CHECK(b42.cross_neighbor(v, 2, 3) == u);

  const auto e01 = bc.cross_edges(0, 1, 1);
  REQUIRE(e01.size() == 3);
  CHECK(e01[0].u == at(bc, "00"));
  CHECK(e01[0].v == at(bc, "10"));
  CHECK(e01[2].u == at(bc, "02"));
  CHECK(e01[2].v == at(bc, "12"));
  CHECK(b42.cross_edges(1, 3, 2).size() == 16);
  CHECK_THROWS(bc.cross_edges(1, 1, 1));
}

TEST_CASE("subgraph projection") {
  BCube bc({3, 1});
  SubgraphProjection p(bc, 1, 2);
  CHECK(p.to_sub(at(bc, "21")).code == 1);
  CHECK(p.to_parent(NodeId{1}) == at(bc, "21"));

  BCube b42({4, 2});
  SubgraphProjection q(b42, 2, 1);
  CHECK(q.sub().format(q.to_sub(at(b42, "132"))) == "32");
  for (NodeId u : b42.subgraph_nodes(2, 1)) {
    CHECK(q.to_parent(q.to_sub(u)) == u);
    for (NodeId v : b42.subgraph_nodes(2, 1))
      CHECK(b42.are_adjacent(u, v) == q.sub().are_adjacent(q.to_sub(u), q.to_sub(v)));
  }

  // Middle split dimension: higher dimensions shift down.
  SubgraphProjection mid(b42, 1, 3);
  CHECK(mid.sub_dimension(0) == 0);
  CHECK(mid.sub_dimension(2) == 1);
  CHECK(mid.sub().format(mid.to_sub(at(b42, "230"))) == "20");

  CHECK_THROWS(SubgraphProjection(BCube({4, 0}), 0, 1));
}

TEST_CASE("subgraphs partition the node set") {
  BCube bc({4, 2});
  for (int d = 0; d <= 2; ++d) {
    std::vector<int> owner(bc.node_count(), -1);
    for (int m = 0; m < 4; ++m) {
      const auto nodes = bc.subgraph_nodes(d, m);
      CHECK(nodes.size() == 16);
      for (NodeId u : nodes) {
        CHECK(owner[u.code] == -1);
        owner[u.code] = m;
      }
    }
    CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
  }
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(BCube({3, 1}));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 18);
  CHECK(dot.find("\"00\" -- \"01\"") != std::string::npos);
}
