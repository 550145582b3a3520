#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcube/dpc.hpp"
#include "bcube/pef.hpp"
#include "bcube/topology.hpp"

namespace bcube::oracle {

enum class ViolationKind {
  DuplicateNode,
  NonAdjacentStep,
  FaultyEdgeUsed,
  WrongEndpoint,
  NotDisjoint,
  IncompleteCover,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string location;
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Checks endpoints, distinct nodes, adjacency of every step, fault
/// avoidance, and that the visited node set equals required_nodes.
/// Adjacency is recomputed from the digits here, not taken from BCube.
VerifyReport verify_path(Dims dims, const Path& path, const FaultSet& faults, std::span<const NodeId> required_nodes,
                         NodeId s, NodeId t);

/// Both paths checked as above, plus disjointness and cover of all n^{k+1} nodes.
VerifyReport verify_2dpc(const Dpc& dpc, const FaultSet& faults, Dims dims, const EndpointQuad& q);

/// Simple graph of at most 64 nodes held as adjacency bitmasks.
class SmallGraph {
 public:
  explicit SmallGraph(int size);
  static SmallGraph complete(int size);
  /// BC(n,k) rebuilt by pairwise digit comparison.
  static SmallGraph bcube(Dims dims);

  /// Copy with the given edges removed (node codes index the graph).
  SmallGraph without(const FaultSet& faults) const;
  SmallGraph without(std::span<const std::pair<int, int>> edges) const;

  int size() const { return size_; }
  bool adjacent(int a, int b) const { return (adj_[a] >> b) & 1U; }
  std::uint64_t neighbours(int a) const { return adj_[a]; }
  void connect(int a, int b);
  void disconnect(int a, int b);

 private:
  int size_;
  std::vector<std::uint64_t> adj_;
};

constexpr int kDefaultDpcCap = 20;
constexpr int kDefaultHamCap = 24;

/// Exhaustive (s,t)-Hamiltonian path search. Throws InstanceTooLarge when
/// the graph exceeds cap nodes.
std::optional<Path> brute_ham(const SmallGraph& g, NodeId s, NodeId t, int cap = kDefaultHamCap);

/// Exhaustive paired 2-DPC search: p1 is grown to t1 first, then p2 must
/// cover every remaining node. A nullopt result is a proof of nonexistence.
std::optional<Dpc> brute_2dpc(const SmallGraph& g, const EndpointQuad& q, int cap = kDefaultDpcCap);

/// Number of distinct paired 2-DPCs for q.
std::size_t count_2dpc(const SmallGraph& g, const EndpointQuad& q, int cap = kDefaultDpcCap);

}  // namespace bcube::oracle
