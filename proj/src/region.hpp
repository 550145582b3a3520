#pragma once

// Pieces shared by the Hamiltonian path and 2-DPC constructions: recursion
// into a subgraph, crossing selection between consecutive subgraphs, and the
// exit-edge scan used to splice detours.

#include <optional>
#include <span>
#include <vector>

#include "bcube/hampath.hpp"

namespace bcube::detail {

/// Where a path enters and leaves one subgraph of a label path.
struct Crossing {
  NodeId entry;
  NodeId exit;
};

/// Hamiltonian path of BC[label] - F from `from` to `to`, built in BC(n,k-1).
Path intra_ham_path(const BCube& bc, const FaultSet& faults, int split_dim, int label, NodeId from, NodeId to);

/// Entry/exit per subgraph along label_path. Candidates are scanned in
/// ascending node order with backtracking; returns nullopt when no choice of
/// fault-free crossings keeps every entry distinct from its exit.
std::optional<std::vector<Crossing>> choose_crossings(const BCube& bc, const FaultSet& faults, int split_dim, NodeId s,
                                                      NodeId t, std::span<const int> label_path);

/// Concatenates recursive Hamiltonian paths of each subgraph.
Path fill_crossings(const BCube& bc, const FaultSet& faults, int split_dim, std::span<const int> label_path,
                    std::span<const Crossing> crossings);

struct ExitEdge {
  std::size_t path_index = 0;
  std::size_t position = 0;  // x = paths[path_index][position], x* is the next node
  NodeId x;
  NodeId x_star;
  int l1 = -1;
  int l2 = -1;
};

/// First path edge (x,x*) with fault-free crossings from x into l1 and from
/// x* into l2, l1 != l2 both in omega. Edges left to right, labels ascending.
std::optional<ExitEdge> scan_exit_edge(const BCube& bc, std::span<const Path> paths, std::span<const int> omega,
                                       const FaultSet& faults, int split_dim);

/// p[0..position] + detour + p[position+1..].
Path splice(const Path& p, std::size_t position, const Path& detour);

}  // namespace bcube::detail
