#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bcube/topology.hpp"

namespace bcube {

/// Immutable set of faulty edges of one BC(n,k), with per-dimension counts.
class FaultSet {
 public:
  explicit FaultSet(Dims dims);
  /// Edges are canonicalized and deduplicated. Throws std::invalid_argument
  /// for a pair that is not an edge of bc.
  FaultSet(const BCube& bc, std::span<const std::pair<NodeId, NodeId>> pairs);
  FaultSet(const BCube& bc, std::vector<Edge> edges);

  Dims dims() const { return dims_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool contains(NodeId u, NodeId v) const { return keys_.contains(key(u, v)); }
  bool contains(const Edge& e) const { return contains(e.u, e.v); }

  /// |F_i| for i = 0..k.
  const std::vector<std::size_t>& per_dim_counts() const { return per_dim_; }
  std::size_t count(int dim) const { return per_dim_.at(dim); }

 private:
  static std::uint64_t key(NodeId u, NodeId v) {
    return u < v ? (std::uint64_t{u.code} << 32) | v.code : (std::uint64_t{v.code} << 32) | u.code;
  }
  void index(const BCube& bc);

  Dims dims_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> keys_;
  std::vector<std::size_t> per_dim_;
};

/// Per-index fault budget f(i) of the partitioned edge fault model.
/// f(0) = n-5 for n = 7, n-4 otherwise; for i >= 1, max{0, n^i - 5} when
/// 4 <= n <= 9 and floor(ceil((n^i-1)/2)*(n-2) - 3n/2) when n >= 10.
/// Throws std::invalid_argument for n < 4 or i < 0.
std::int64_t budget(int n, int i);

/// f(0..k) in index order.
std::vector<std::int64_t> budgets(Dims dims);

/// Budgets sorted ascending; slot j of this vector caps the j-th smallest
/// per-dimension fault count.
std::vector<std::int64_t> sorted_budgets(Dims dims);

/// Per-dimension fault counts sorted ascending (r_0 <= ... <= r_k).
std::vector<std::size_t> sorted_profile(const FaultSet& faults);

/// True iff the sorted fault counts fit under the sorted budgets slot by slot,
/// i.e. the counts can be assigned to distinct budget indices.
bool is_f_pef(const FaultSet& faults);

/// Sum of f(j) over j = 0..k.
std::int64_t max_total_budget(Dims dims);

/// Dimension carrying the most faults; ties go to the largest index.
int split_dimension(const FaultSet& faults);

/// Faults with both endpoints in BC[label], re-addressed in BC(n,k-1).
FaultSet subgraph_faults(const FaultSet& faults, int label, int split_dim);

/// |F ∩ E(l1,l2)| along split_dim.
std::size_t cross_fault_count(const FaultSet& faults, int l1, int l2, int split_dim);

/// n x n matrix of |F ∩ E(i,j)| along split_dim.
std::vector<std::vector<std::size_t>> cross_fault_matrix(const FaultSet& faults, int split_dim);

/// Random f-PEF: dimension i receives round(fill * sorted_budgets[i]) faults
/// drawn uniformly from E_i, so the largest budget lands on the highest index.
/// Deterministic for a fixed seed.
FaultSet gen_random_pef(Dims dims, double fill, std::uint64_t seed);

}  // namespace bcube
