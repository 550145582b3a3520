#include <doctest.h>

#include <bit>

#include "bcube/oracle.hpp"

using namespace bcube;
using namespace bcube::oracle;

namespace {

Path nodes(std::initializer_list<std::uint32_t> codes) {
  Path p;
  for (auto c : codes) p.push_back(NodeId{c});
  return p;
}

std::vector<NodeId> range(std::uint32_t n) {
  std::vector<NodeId> out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back({i});
  return out;
}

}  // namespace

TEST_CASE("path verifier") {
  const Dims k4{4, 0};
  const FaultSet none(k4);
  const auto all = range(4);
  CHECK(verify_path(k4, nodes({0, 1, 2, 3}), none, all, {0}, {3}).ok());

  const auto dup = verify_path(k4, nodes({0, 1, 0, 3}), none, all, {0}, {3});
  CHECK(dup.has(ViolationKind::DuplicateNode));
  CHECK(dup.has(ViolationKind::IncompleteCover));

  const std::pair<NodeId, NodeId> bad[] = {{{1}, {2}}};
  const FaultSet f(BCube(k4), bad);
  const auto faulty = verify_path(k4, nodes({0, 1, 2, 3}), f, all, {0}, {3});
  CHECK(faulty.has(ViolationKind::FaultyEdgeUsed));
  CHECK(faulty.violations.size() == 1);

  CHECK(verify_path(k4, nodes({0, 1, 2, 3}), none, all, {1}, {3}).has(ViolationKind::WrongEndpoint));
  CHECK(verify_path(k4, nodes({0, 1, 2, 3}), none, all, {0}, {2}).has(ViolationKind::WrongEndpoint));
  CHECK(verify_path(k4, {}, none, all, {0}, {3}).has(ViolationKind::WrongEndpoint));

  const Dims b31{3, 1};
  const auto step = verify_path(b31, nodes({0, 4}), FaultSet(b31), {}, {0}, {4});
  CHECK(step.has(ViolationKind::NonAdjacentStep));

  // Node outside the graph and nodes not asked for.
  CHECK(verify_path(k4, nodes({0, 7}), none, all, {0}, {7}).has(ViolationKind::IncompleteCover));
  const NodeId two[] = {{0}, {1}};
  CHECK(verify_path(k4, nodes({0, 1, 2}), none, two, {0}, {2}).has(ViolationKind::IncompleteCover));
}

TEST_CASE("2-DPC verifier") {
  const Dims k4{4, 0};
  const FaultSet none(k4);
  const EndpointQuad q{{0}, {2}, {1}, {3}};
  CHECK(verify_2dpc(Dpc{nodes({0, 2}), nodes({1, 3})}, none, k4, q).ok());

  const auto overlap = verify_2dpc(Dpc{nodes({0, 3, 2}), nodes({1, 3})}, none, k4, q);
  CHECK(overlap.has(ViolationKind::NotDisjoint));

  const Dims k5{5, 0};
  const auto missing = verify_2dpc(Dpc{nodes({0, 2}), nodes({1, 3})}, FaultSet(k5), k5, q);
  CHECK(missing.has(ViolationKind::IncompleteCover));
  CHECK(missing.violations.size() == 1);

  const auto swapped = verify_2dpc(Dpc{nodes({1, 3}), nodes({0, 2})}, none, k4, q);
  CHECK(swapped.has(ViolationKind::WrongEndpoint));

  // Every kind has a name.
  for (auto k : {ViolationKind::DuplicateNode, ViolationKind::NonAdjacentStep, ViolationKind::FaultyEdgeUsed,
                 ViolationKind::WrongEndpoint, ViolationKind::NotDisjoint, ViolationKind::IncompleteCover})
    CHECK_FALSE(to_string(k).empty());
  CHECK(to_string(ViolationKind::NotDisjoint) == "not-disjoint");
}

TEST_CASE("small graphs") {
  const SmallGraph k4 = SmallGraph::complete(4);
  CHECK(k4.adjacent(0, 3));
  CHECK_FALSE(k4.adjacent(2, 2));

  const SmallGraph bc = SmallGraph::bcube({4, 1});
  CHECK(bc.size() == 16);
  int degree_sum = 0;
  for (int v = 0; v < 16; ++v) degree_sum += std::popcount(bc.neighbours(v));
  CHECK(degree_sum == 2 * 48);
  CHECK(bc.adjacent(0, 4));  // 00 - 10
  CHECK_FALSE(bc.adjacent(0, 5));

  const std::pair<int, int> cut[] = {{0, 1}};
  CHECK_FALSE(k4.without(cut).adjacent(1, 0));
  CHECK(k4.adjacent(1, 0));

  CHECK_THROWS_AS(SmallGraph(65), InstanceTooLarge);
  CHECK_THROWS_AS(SmallGraph::bcube({5, 2}), InstanceTooLarge);
}

TEST_CASE("brute-force Hamiltonian paths") {
  const SmallGraph k4 = SmallGraph::complete(4);
  // Every 0 -> 3 Hamiltonian path of K_4 uses the edge between the two inner nodes.
  const std::pair<int, int> inner[] = {{1, 2}};
  CHECK_FALSE(brute_ham(k4.without(inner), {0}, {3}));
  const std::pair<int, int> cut[] = {{0, 1}};
  const auto p = brute_ham(k4.without(cut), {0}, {3});
  REQUIRE(p);
  CHECK(*p == nodes({0, 2, 1, 3}));
  CHECK(verify_path({4, 0}, *p, FaultSet(BCube({4, 0}), std::vector<std::pair<NodeId, NodeId>>{{{0}, {1}}}), range(4),
                    {0}, {3})
            .ok());

  SmallGraph line(3);
  line.connect(0, 1);
  line.connect(1, 2);
  CHECK_FALSE(brute_ham(line, {0}, {1}));
  CHECK(brute_ham(line, {0}, {2}).has_value());

  const auto bc = SmallGraph::bcube({4, 1});
  CHECK(brute_ham(bc, {0}, {15}).has_value());
  CHECK(brute_ham(bc, {3}, {9}).has_value());

  CHECK_THROWS_AS(brute_ham(SmallGraph::complete(30), {0}, {1}), InstanceTooLarge);
  CHECK(brute_ham(SmallGraph::complete(30), {0}, {1}, 30).has_value());
  CHECK_THROWS(brute_ham(k4, {0}, {9}));
}

TEST_CASE("brute-force 2-DPC") {
  const SmallGraph k4 = SmallGraph::complete(4);
  const EndpointQuad q{{0}, {2}, {1}, {3}};
  CHECK(count_2dpc(k4, q) == 1);
  const auto w = brute_2dpc(k4, q);
  REQUIRE(w);
  CHECK(w->p1 == nodes({0, 2}));
  CHECK(w->p2 == nodes({1, 3}));

  // K_5: node 4 sits inside one of the two paths.
  CHECK(count_2dpc(SmallGraph::complete(5), EndpointQuad{{0}, {1}, {2}, {3}}) == 2);

  const std::pair<int, int> cut[] = {{0, 2}};
  CHECK_FALSE(brute_2dpc(k4.without(cut), q));

  const auto bc = SmallGraph::bcube({4, 1});
  const EndpointQuad bq{{0}, {5}, {10}, {15}};
  const auto d = brute_2dpc(bc, bq);
  REQUIRE(d);
  CHECK(verify_2dpc(*d, FaultSet(Dims{4, 1}), {4, 1}, bq).ok());

  CHECK_THROWS_AS(brute_2dpc(SmallGraph::complete(21), q), InstanceTooLarge);
  CHECK_THROWS_AS(brute_2dpc(k4, EndpointQuad{{0}, {1}, {0}, {3}}), std::invalid_argument);
}
