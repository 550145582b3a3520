#pragma once

// Backtracking used by the constructive base cases (complete graphs and
// contracted graphs). Graphs here have at most 64 vertices.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace bcube::detail {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

struct DenseGraph {
  explicit DenseGraph(int size);
  static DenseGraph complete(int size);

  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const { return (adj[a] >> b) & 1U; }
  Mask all() const { return size == 64 ? ~Mask{0} : bit(size) - 1; }

  int size;
  std::vector<Mask> adj;
};

using PathVisitor = std::function<bool(const std::vector<int>&)>;
using CoverVisitor = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

/// Visits every Hamiltonian path of g[within] from s to t, extending with the
/// smallest neighbour first. Stops as soon as visit returns true; the return
/// value says whether it stopped.
bool for_each_hamiltonian_path(const DenseGraph& g, Mask within, int s, int t, const PathVisitor& visit);

std::optional<std::vector<int>> hamiltonian_path(const DenseGraph& g, Mask within, int s, int t);

/// Visits paired covers (s1->t1, s2->t2) of g. The vertices other than the
/// four endpoints are split between the paths by bitmask in ascending order;
/// for each split, Hamiltonian paths of the two sides are combined.
bool for_each_paired_cover(const DenseGraph& g, int s1, int t1, int s2, int t2, const CoverVisitor& visit);

}  // namespace bcube::detail
