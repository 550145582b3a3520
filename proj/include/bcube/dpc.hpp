#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcube/errors.hpp"
#include "bcube/hampath.hpp"
#include "bcube/pef.hpp"
#include "bcube/topology.hpp"

namespace bcube {

/// Sources s1, s2 and destinations t1, t2; all four distinct.
struct EndpointQuad {
  NodeId s1;
  NodeId t1;
  NodeId s2;
  NodeId t2;

  friend bool operator==(const EndpointQuad&, const EndpointQuad&) = default;
};

/// Throws std::invalid_argument unless the four nodes are distinct nodes of bc.
void validate_quad(const BCube& bc, const EndpointQuad& q);

/// Paired 2-disjoint path cover: p1 runs s1 -> t1, p2 runs s2 -> t2, and
/// together they visit every node exactly once.
struct Dpc {
  Path p1;
  Path p2;
};

/// Layout of the four endpoints over the subgraphs of the split dimension.
enum class CaseKind {
  AllSame,      // one subgraph holds all four
  ThreeSame,    // exactly three share a subgraph
  PairSources,  // l(s1) = l(s2) or l(t1) = l(t2)
  PairCross,    // l(s_i) = l(t_j), i != j
  PairMatched,  // l(s_i) = l(t_i) only
  AllDistinct,  // four subgraphs
};

std::string_view to_string(CaseKind kind);

/// Symmetry used to bring a quadruple into canonical layout. Applied in the
/// order: swap the two pairs, then reverse pair 1, then reverse pair 2.
struct Transform {
  bool swap_pairs = false;
  bool reverse_first = false;
  bool reverse_second = false;

  EndpointQuad apply(const EndpointQuad& q) const;
  /// Maps a cover of apply(q) back to a cover of q.
  Dpc undo(Dpc d) const;
  bool identity() const { return !swap_pairs && !reverse_first && !reverse_second; }

  friend bool operator==(const Transform&, const Transform&) = default;
};

/// Transforms in the order classify tries them (index bits: swap, rev1, rev2).
Transform transform_by_index(int index);

struct CaseTag {
  CaseKind kind = CaseKind::AllSame;
  Transform transform;
};

/// Case plus the first transform (in transform_by_index order) that reaches
/// the canonical layout: s1,s2,t1 together for ThreeSame; l(s1) = l(s2) for
/// PairSources and PairCross; l(s1) = l(t1) for PairMatched.
CaseTag classify(const BCube& bc, const EndpointQuad& q, int split_dim);

/// One recursion level of dpc_bcube.
struct TraceEntry {
  int level = 0;
  int split_dim = -1;
  CaseKind kind = CaseKind::AllSame;
  Transform transform;
  std::string branch;  // "base", "1", "2", "3.1(1)", "3.1(2)", "3.2(2)", "4"; "+forced" marks a re-routed bridge
};
using CaseTrace = std::vector<TraceEntry>;

/// 2-DPC of K_n - F (F on BC(n,0)) by backtracking over bipartitions of the
/// non-endpoint vertices. Throws NoDpc when none exists.
Dpc dpc_complete(int n, const FaultSet& faults, const EndpointQuad& q);

struct ExitPair {
  NodeId x;
  NodeId x_star;
  int l1 = -1;
  int l2 = -1;
  std::size_t path_index = 0;
  std::size_t position = 0;  // index of x in paths[path_index]
};

/// Edge (x,x*) on the given paths (inside BC[m], m not in omega) with
/// fault-free crossings x -> BC[l1], x* -> BC[l2], l1 != l2 in omega.
/// Throws NotFound.
ExitPair find_exit_pair(const BCube& bc, std::span<const Path> paths, std::span<const int> omega,
                        const FaultSet& faults, int split_dim);

struct EscapeNode {
  NodeId x;
  int label = -1;
};

/// First node of BC[label] outside `avoid` (ascending) with a fault-free
/// crossing into one of `targets` (ascending). Throws NotFound.
EscapeNode find_escape_node(const BCube& bc, int label, std::span<const NodeId> avoid, std::span<const int> targets,
                            const FaultSet& faults, int split_dim);

struct BridgeEdge {
  std::size_t position = 0;  // z = h[position], z* = h[position + 1]
  NodeId z;
  NodeId z_star;
};

/// First consecutive pair (z,z*) on h whose crossings into BC[target_label]
/// are fault-free, land on two distinct nodes, and avoid forbidden_far.
/// Throws NotFound.
BridgeEdge find_bridge_edge(const BCube& bc, const Path& h, int target_label, std::span<const NodeId> forbidden_far,
                            const FaultSet& faults, int split_dim);

/// Paired 2-DPC of BC(n,k) - F. Recurses along split_dimension(F); each
/// level appends to `trace` before descending. Throws NoDpc.
Dpc dpc_bcube(const BCube& bc, const FaultSet& faults, const EndpointQuad& q, CaseTrace* trace = nullptr);

}  // namespace bcube
