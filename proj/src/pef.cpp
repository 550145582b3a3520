#include "bcube/pef.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace bcube {

FaultSet::FaultSet(Dims dims) : dims_(dims), per_dim_(static_cast<std::size_t>(dims.k + 1), 0) {
  if (dims.n < 2 || dims.k < 0) throw std::invalid_argument("BCube requires n >= 2 and k >= 0");
}

FaultSet::FaultSet(const BCube& bc, std::span<const std::pair<NodeId, NodeId>> pairs) : FaultSet(bc.dims()) {
  edges_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges_.push_back(bc.edge(u, v));
  index(bc);
}

FaultSet::FaultSet(const BCube& bc, std::vector<Edge> edges) : FaultSet(bc.dims()) {
  edges_ = std::move(edges);
  for (Edge& e : edges_) e = bc.edge(e.u, e.v);
  index(bc);
}

void FaultSet::index(const BCube&) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  keys_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    keys_.insert(key(e.u, e.v));
    ++per_dim_[e.dim];
  }
}

std::int64_t budget(int n, int i) {
  if (n < 4) throw std::invalid_argument("fault budgets are defined for n >= 4");
  if (i < 0) throw std::invalid_argument("budget index must be non-negative");
  if (i == 0) return n == 7 ? n - 5 : n - 4;
  std::int64_t p = 1;
  for (int j = 0; j < i; ++j) {
    if (p > std::numeric_limits<std::int64_t>::max() / (4 * n)) throw std::overflow_error("budget overflows");
    p *= n;
  }
  if (n <= 9) return std::max<std::int64_t>(0, p - 5);
  // 3n/2 is a half-integer for odd n; floor of the whole expression.
  return (p / 2) * (n - 2) - (3 * n + 1) / 2;
}

std::vector<std::int64_t> budgets(Dims dims) {
  std::vector<std::int64_t> out;
  for (int j = 0; j <= dims.k; ++j) out.push_back(budget(dims.n, j));
  return out;
}

std::vector<std::int64_t> sorted_budgets(Dims dims) {
  auto out = budgets(dims);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> sorted_profile(const FaultSet& faults) {
  auto r = faults.per_dim_counts();
  std::sort(r.begin(), r.end());
  return r;
}

bool is_f_pef(const FaultSet& faults) {
  const auto r = sorted_profile(faults);
  const auto f = sorted_budgets(faults.dims());
  for (std::size_t j = 0; j < r.size(); ++j)
    if (static_cast<std::int64_t>(r[j]) > f[j]) return false;
  return true;
}

std::int64_t max_total_budget(Dims dims) {
  std::int64_t total = 0;
  for (std::int64_t f : budgets(dims)) total += f;
  return total;
}

int split_dimension(const FaultSet& faults) {
  const auto& c = faults.per_dim_counts();
  int best = 0;
  for (int i = 1; i < static_cast<int>(c.size()); ++i)
    if (c[i] >= c[best]) best = i;
  return best;
}

FaultSet subgraph_faults(const FaultSet& faults, int label, int split_dim) {
  const BCube bc(faults.dims());
  const SubgraphProjection proj(bc, split_dim, label);
  std::vector<Edge> kept;
  for (const Edge& e : faults.edges()) {
    if (e.dim == split_dim || bc.digit(e.u, split_dim) != label) continue;
    kept.push_back(Edge{proj.to_sub(e.u), proj.to_sub(e.v), proj.sub_dimension(e.dim)});
  }
  return FaultSet(proj.sub(), std::move(kept));
}

std::size_t cross_fault_count(const FaultSet& faults, int l1, int l2, int split_dim) {
  if (l1 == l2) throw std::invalid_argument("cross edges need two distinct labels");
  const BCube bc(faults.dims());
  std::size_t count = 0;
  for (const Edge& e : faults.edges()) {
    if (e.dim != split_dim) continue;
    const int a = bc.digit(e.u, split_dim);
    const int b = bc.digit(e.v, split_dim);
    if ((a == l1 && b == l2) || (a == l2 && b == l1)) ++count;
  }
  return count;
}

std::vector<std::vector<std::size_t>> cross_fault_matrix(const FaultSet& faults, int split_dim) {
  const BCube bc(faults.dims());
  const auto n = static_cast<std::size_t>(bc.radix());
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
  for (const Edge& e : faults.edges()) {
    if (e.dim != split_dim) continue;
    const auto a = static_cast<std::size_t>(bc.digit(e.u, split_dim));
    const auto b = static_cast<std::size_t>(bc.digit(e.v, split_dim));
    ++m[a][b];
    ++m[b][a];
  }
  return m;
}

FaultSet gen_random_pef(Dims dims, double fill, std::uint64_t seed) {
  if (!(fill >= 0.0 && fill <= 1.0)) throw std::invalid_argument("fill must lie in [0,1]");
  const BCube bc(dims);
  const auto slots = sorted_budgets(dims);
  std::mt19937_64 rng(seed);
  std::vector<Edge> chosen;
  for (int i = 0; i <= dims.k; ++i) {
    const auto want = static_cast<std::size_t>(std::llround(fill * static_cast<double>(slots[i])));
    if (want == 0) continue;
    auto pool = bc.dimension_edges(i);
    const std::size_t take = std::min(want, pool.size());
    // Partial Fisher-Yates: the first `take` entries become a uniform sample.
    for (std::size_t j = 0; j < take; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    chosen.insert(chosen.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return FaultSet(bc, std::move(chosen));
}

}  // namespace bcube
