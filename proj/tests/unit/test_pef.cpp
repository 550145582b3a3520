#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bcube/pef.hpp"

using namespace bcube;

namespace {

// Takes `count[i]` edges of dimension i, in canonical order.
FaultSet with_counts(Dims dims, std::vector<std::size_t> count) {
  BCube bc(dims);
  std::vector<Edge> picked;
  for (int i = 0; i <= dims.k; ++i) {
    const auto all = bc.dimension_edges(i);
    picked.insert(picked.end(), all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count[i]));
  }
  return FaultSet(bc, picked);
}

}  // namespace

TEST_CASE("budgets") {
  CHECK(budget(7, 0) == 2);
  CHECK(budget(4, 0) == 0);
  CHECK(budget(9, 0) == 5);
  CHECK(budget(4, 1) == 0);
  CHECK(budget(4, 2) == 11);
  CHECK(budget(5, 1) == 0);
  CHECK(budget(5, 2) == 20);
  CHECK(budget(10, 1) == 25);
  // Odd n >= 10: ceil(10/2) * 9 - 16.5 rounds down.
  CHECK(budget(11, 1) == 28);
  CHECK(budget(10, 2) == 385);
  CHECK_THROWS_AS(budget(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(budget(5, -1), std::invalid_argument);

  // Nondecreasing from index 1 on; f(1) < f(0) happens for n in {5, 6, 8, 9}.
  for (int n = 4; n <= 16; ++n)
    for (int i = 1; i < 4; ++i) CHECK(budget(n, i) <= budget(n, i + 1));
  CHECK(budget(6, 1) < budget(6, 0));
}

TEST_CASE("max total budget") {
  CHECK(max_total_budget({7, 1}) == 4);
  CHECK(max_total_budget({4, 2}) == 11);
  CHECK(max_total_budget({10, 1}) == 31);
  CHECK(max_total_budget({5, 2}) == 21);
  CHECK(max_total_budget({4, 1}) == 0);
  CHECK_THROWS(max_total_budget({3, 1}));
  for (int n = 4; n <= 12; ++n)
    for (int k = 0; k <= 2; ++k) {
      const auto b = budgets({n, k});
      CHECK(max_total_budget({n, k}) == std::accumulate(b.begin(), b.end(), std::int64_t{0}));
      for (auto f : b) CHECK(f < static_cast<std::int64_t>(edge_count({n, k})));
    }
}

TEST_CASE("fault set construction") {
  BCube bc({4, 1});
  const std::pair<NodeId, NodeId> dup[] = {{bc.parse("01"), bc.parse("00")}, {bc.parse("00"), bc.parse("01")},
                                           {bc.parse("00"), bc.parse("30")}};
  FaultSet f(bc, dup);
  CHECK(f.size() == 2);
  CHECK(f.count(0) == 1);
  CHECK(f.count(1) == 1);
  CHECK(f.contains(bc.parse("01"), bc.parse("00")));
  CHECK_FALSE(f.contains(bc.parse("01"), bc.parse("02")));

  const std::pair<NodeId, NodeId> bad[] = {{bc.parse("00"), bc.parse("11")}};
  CHECK_THROWS_AS(FaultSet(bc, bad), std::invalid_argument);
}

TEST_CASE("f-PEF check") {
  CHECK(is_f_pef(FaultSet(Dims{5, 2})));
  CHECK(is_f_pef(FaultSet(Dims{4, 0})));
  for (const Edge& e : BCube({4, 1}).edges()) {
    CHECK_FALSE(is_f_pef(FaultSet(BCube({4, 1}), std::vector<Edge>{e})));
  }
  CHECK(is_f_pef(with_counts({5, 2}, {1, 0, 20})));
  CHECK(is_f_pef(with_counts({5, 2}, {0, 1, 20})));
  CHECK(is_f_pef(with_counts({5, 2}, {20, 1, 0})));
  CHECK_FALSE(is_f_pef(with_counts({5, 2}, {1, 1, 20})));
  CHECK_FALSE(is_f_pef(with_counts({5, 2}, {0, 0, 21})));
  CHECK(is_f_pef(with_counts({7, 0}, {2})));
  CHECK_FALSE(is_f_pef(with_counts({7, 0}, {3})));
  CHECK(is_f_pef(with_counts({10, 1}, {6, 25})));
  CHECK(is_f_pef(with_counts({10, 1}, {25, 6})));
  CHECK_FALSE(is_f_pef(with_counts({10, 1}, {7, 25})));

  // Only the multiset of counts matters.
  std::vector<std::size_t> c{0, 1, 20};
  do {
    CHECK(is_f_pef(with_counts({5, 2}, c)));
  } while (std::next_permutation(c.begin(), c.end()));
}

TEST_CASE("sorted profile") {
  const FaultSet f = with_counts({5, 2}, {3, 1, 0});
  CHECK(f.per_dim_counts() == std::vector<std::size_t>{3, 1, 0});
  CHECK(sorted_profile(f) == std::vector<std::size_t>{0, 1, 3});
  CHECK(sorted_budgets({5, 2}) == std::vector<std::int64_t>{0, 1, 20});
}

TEST_CASE("split dimension") {
  CHECK(split_dimension(FaultSet(Dims{4, 2})) == 2);
  CHECK(split_dimension(with_counts({5, 2}, {3, 1, 0})) == 0);
  CHECK(split_dimension(with_counts({5, 2}, {2, 2, 1})) == 1);
  CHECK(split_dimension(FaultSet(Dims{5, 0})) == 0);
}

TEST_CASE("subgraph faults") {
  BCube bc({5, 1});
  CHECK(subgraph_faults(FaultSet(Dims{5, 1}), 0, 1).empty());

  const std::pair<NodeId, NodeId> one[] = {{bc.parse("00"), bc.parse("01")}};
  const FaultSet f(bc, one);
  const FaultSet g = subgraph_faults(f, 0, 1);
  CHECK(g.dims() == Dims{5, 0});
  REQUIRE(g.size() == 1);
  CHECK(g.edges()[0].u.code == 0);
  CHECK(g.edges()[0].v.code == 1);
  CHECK(subgraph_faults(f, 1, 1).empty());
  // Split along dimension 0: the edge joins BC[0] and BC[1], so it belongs to neither.
  CHECK(subgraph_faults(f, 0, 0).empty());
  CHECK_THROWS(subgraph_faults(FaultSet(Dims{5, 0}), 0, 0));

  // Saturated sets split into in-budget subgraphs.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const FaultSet r = gen_random_pef({5, 2}, 1.0, seed);
    const int d = split_dimension(r);
    std::size_t inside = 0;
    for (int m = 0; m < 5; ++m) {
      const FaultSet s = subgraph_faults(r, m, d);
      CHECK(is_f_pef(s));
      inside += s.size();
    }
    CHECK(inside == r.size() - r.count(d));
  }
}

TEST_CASE("cross fault counts") {
  BCube bc({5, 1});
  CHECK(cross_fault_count(FaultSet(Dims{5, 1}), 0, 1, 1) == 0);
  const std::pair<NodeId, NodeId> one[] = {{bc.parse("00"), bc.parse("10")}};
  const FaultSet f(bc, one);
  CHECK(cross_fault_count(f, 0, 1, 1) == 1);
  CHECK(cross_fault_count(f, 1, 0, 1) == 1);
  CHECK(cross_fault_count(f, 0, 2, 1) == 0);
  CHECK_THROWS(cross_fault_count(f, 2, 2, 1));
  const auto m = cross_fault_matrix(f, 1);
  CHECK(m[0][1] == 1);
  CHECK(m[1][0] == 1);
  CHECK(m[0][2] == 0);
}

TEST_CASE("random f-PEF generation") {
  CHECK(gen_random_pef({5, 2}, 0.0, 9).empty());
  CHECK(gen_random_pef({4, 1}, 1.0, 9).empty());
  CHECK(gen_random_pef({10, 1}, 1.0, 42).size() == 31);
  const FaultSet s = gen_random_pef({5, 2}, 1.0, 7);
  CHECK(is_f_pef(s));
  CHECK(s.size() == 21);
  CHECK(s.count(2) == 20);  // largest budget on the highest index

  CHECK(gen_random_pef({8, 1}, 1.0, 3).edges() == gen_random_pef({8, 1}, 1.0, 3).edges());
  CHECK(gen_random_pef({8, 1}, 1.0, 3).edges() != gen_random_pef({8, 1}, 1.0, 4).edges());
  CHECK_THROWS_AS(gen_random_pef({5, 1}, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_pef({5, 1}, -0.1, 1), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Dims d{4 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 3)};
    const double x = fill(rng);
    const FaultSet r = gen_random_pef(d, x, rng());
    CHECK(is_f_pef(r));
    const auto sb = sorted_budgets(d);
    const auto prof = sorted_profile(r);
    for (std::size_t j = 0; j < prof.size(); ++j)
      CHECK(static_cast<double>(prof[j]) <= std::llround(x * static_cast<double>(sb[j])));
  }
}
