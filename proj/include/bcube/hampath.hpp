#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "bcube/errors.hpp"
#include "bcube/pef.hpp"
#include "bcube/topology.hpp"

namespace bcube {

/// Node sequence; consecutive nodes are adjacent and no node repeats.
using Path = std::vector<NodeId>;

/// Labels of the subgraphs BC[i] of a partition; i ~ j when at least
/// `threshold` fault-free edges join BC[i] and BC[j].
struct ContractedGraph {
  int radix = 0;
  int threshold = 0;
  std::vector<int> labels;
  std::vector<std::vector<char>> adjacency;  // radix x radix, indexed by label

  bool adjacent(int a, int b) const { return adjacency[a][b] != 0; }
};

/// Hamiltonian path of K_n - F from s to t by backtracking (F lives on
/// BC(n,0) = K_n). Guaranteed when |F| <= n-4; throws NoPath otherwise.
Path ham_path_complete(int n, const FaultSet& faults, NodeId s, NodeId t);

/// threshold must be 2 or 3; omega needs at least two labels.
ContractedGraph contracted_graph(std::span<const int> omega, const FaultSet& faults, int split_dim, int threshold);

/// Hamiltonian path of the contracted graph between two labels.
std::vector<int> ham_path_contracted(const ContractedGraph& graph, int from, int to);

/// (s,t)-Hamiltonian path of BC[omega] - F that visits the subgraphs in
/// label_path order. Crossings are picked in ascending node order, skipping
/// the current entry and any crossing that would land on t; every subgraph is
/// then filled with a recursive Hamiltonian path.
Path stitch_region(const BCube& bc, std::span<const int> omega, const FaultSet& faults, int split_dim, NodeId s,
                   NodeId t, std::span<const int> label_path);

/// (s,t)-Hamiltonian path of BC[omega] - F for s, t in distinct subgraphs.
Path ham_path_region(const BCube& bc, std::span<const int> omega, const FaultSet& faults, int split_dim, NodeId s,
                     NodeId t);

/// (s,t)-Hamiltonian path of BC(n,k) - F.
Path ham_path_bcube(const BCube& bc, const FaultSet& faults, NodeId s, NodeId t);

/// All labels 0..n-1 except those listed.
std::vector<int> labels_except(int n, std::initializer_list<int> excluded);

}  // namespace bcube
