#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcube {

/// Radix n (servers per switch) and level k of a BCube. A server address has
/// k+1 base-n digits a_k ... a_0.
struct Dims {
  int n = 0;
  int k = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// A server, identified by the scalar encoding sum(a_i * n^i) of its address.
/// The radix and level live in the owning BCube; digit access goes through it.
struct NodeId {
  std::uint32_t code = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Undirected edge in canonical order (u < v) tagged with the single digit
/// position where the endpoints differ.
struct Edge {
  NodeId u;
  NodeId v;
  int dim = 0;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

std::uint64_t node_count(Dims dims);
std::uint64_t edge_count(Dims dims);

/// Logical graph BC(n,k): servers are nodes, two servers are adjacent when
/// their addresses differ in exactly one digit. Nothing is materialized; all
/// queries are answered from (n,k).
class BCube {
 public:
  explicit BCube(Dims dims);

  Dims dims() const { return dims_; }
  int radix() const { return dims_.n; }
  int level() const { return dims_.k; }
  /// Number of digit positions, k+1.
  int dimensions() const { return dims_.k + 1; }

  std::uint64_t node_count() const { return pow_.back(); }
  std::uint64_t edge_count() const { return bcube::edge_count(dims_); }

  bool contains(NodeId u) const { return u.code < pow_.back(); }
  NodeId node(std::uint32_t code) const;
  /// Digits given most significant first (a_k ... a_0).
  NodeId from_digits(std::span<const int> digits) const;
  std::vector<int> digits(NodeId u) const;

  int digit(NodeId u, int i) const { return static_cast<int>((u.code / pow_[i]) % dims_.n); }
  NodeId with_digit(NodeId u, int i, int value) const;

  /// True iff u and v differ in exactly one digit. Throws std::out_of_range
  /// when either node does not belong to this BCube.
  bool are_adjacent(NodeId u, NodeId v) const;
  /// Dimension of the edge (u,v); -1 when u and v are not adjacent.
  int edge_dimension(NodeId u, NodeId v) const;
  /// Canonical edge; throws std::invalid_argument if u,v are not adjacent.
  Edge edge(NodeId u, NodeId v) const;

  std::vector<NodeId> neighbors(NodeId u) const;
  std::vector<Edge> dimension_edges(int i) const;
  std::vector<Edge> edges() const;

  /// n^{m'}(u): u with the digit at split_dim replaced by label.
  NodeId cross_neighbor(NodeId u, int split_dim, int label) const;
  /// E(l1,l2) along split_dim, ordered by the endpoint in BC[l1].
  std::vector<Edge> cross_edges(int l1, int l2, int split_dim) const;
  /// Nodes of BC[label] along split_dim in ascending code order.
  std::vector<NodeId> subgraph_nodes(int split_dim, int label) const;

  /// a_k...a_0 as digit characters for n <= 10, comma separated otherwise.
  std::string format(NodeId u) const;
  /// Inverse of format; throws std::invalid_argument on malformed input.
  NodeId parse(std::string_view text) const;

  std::uint32_t power(int i) const { return pow_[i]; }

 private:
  void check_dim(int i) const;
  void check_label(int label) const;

  Dims dims_;
  std::vector<std::uint32_t> pow_;  // pow_[i] = n^i, i = 0..k+1
};

/// Bijection between BC[label] (along split_dim) of a BC(n,k) and BC(n,k-1),
/// obtained by deleting the split digit. Dimensions above split_dim shift
/// down by one in the projected graph.
class SubgraphProjection {
 public:
  SubgraphProjection(const BCube& parent, int split_dim, int label);

  const BCube& parent() const { return parent_; }
  const BCube& sub() const { return sub_; }
  int split_dim() const { return split_dim_; }
  int label() const { return label_; }

  NodeId to_sub(NodeId u) const;
  NodeId to_parent(NodeId u) const;
  /// Dimension in the projected graph of a parent dimension other than split_dim.
  int sub_dimension(int parent_dim) const { return parent_dim < split_dim_ ? parent_dim : parent_dim - 1; }

 private:
  BCube parent_;
  BCube sub_;
  int split_dim_;
  int label_;
};

/// Graphviz export with one colour per dimension.
std::string to_dot(const BCube& bc);

}  // namespace bcube

template <>
struct std::hash<bcube::NodeId> {
  std::size_t operator()(const bcube::NodeId& u) const noexcept { return std::hash<std::uint32_t>{}(u.code); }
};
