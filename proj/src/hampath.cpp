#include "bcube/hampath.hpp"

#include <algorithm>
#include <string>

#include "region.hpp"
#include "search.hpp"

namespace bcube {

std::vector<int> labels_except(int n, std::initializer_list<int> excluded) {
  std::vector<int> out;
  for (int l = 0; l < n; ++l)
    if (std::find(excluded.begin(), excluded.end(), l) == excluded.end()) out.push_back(l);
  return out;
}

Path ham_path_complete(int n, const FaultSet& faults, NodeId s, NodeId t) {
  if (faults.dims() != Dims{n, 0}) throw std::invalid_argument("complete-graph faults must live on BC(n,0)");
  if (s == t) throw std::invalid_argument("Hamiltonian path endpoints must differ");
  if (s.code >= static_cast<std::uint32_t>(n) || t.code >= static_cast<std::uint32_t>(n))
    throw std::out_of_range("endpoint outside K_n");
  auto g = detail::DenseGraph::complete(n);
  for (const Edge& e : faults.edges()) g.remove_edge(static_cast<int>(e.u.code), static_cast<int>(e.v.code));
  const auto found = detail::hamiltonian_path(g, g.all(), static_cast<int>(s.code), static_cast<int>(t.code));
  if (!found) throw NoPath("K_" + std::to_string(n) + " - F has no Hamiltonian path between the endpoints");
  Path out;
  for (int v : *found) out.push_back(NodeId{static_cast<std::uint32_t>(v)});
  return out;
}

ContractedGraph contracted_graph(std::span<const int> omega, const FaultSet& faults, int split_dim, int threshold) {
  if (threshold != 2 && threshold != 3) throw std::invalid_argument("contracted graph threshold must be 2 or 3");
  if (omega.size() < 2) throw std::invalid_argument("contracted graph needs at least two labels");
  const BCube bc(faults.dims());
  if (split_dim < 0 || split_dim > bc.level()) throw std::out_of_range("split dimension out of range");
  ContractedGraph g;
  g.radix = bc.radix();
  g.threshold = threshold;
  g.labels.assign(omega.begin(), omega.end());
  std::sort(g.labels.begin(), g.labels.end());
  g.adjacency.assign(g.radix, std::vector<char>(g.radix, 0));
  const auto bad = cross_fault_matrix(faults, split_dim);
  const std::size_t per_pair = bc.node_count() / static_cast<std::uint64_t>(bc.radix());
  for (int a : g.labels)
    for (int b : g.labels)
      if (a != b && per_pair - bad[a][b] >= static_cast<std::size_t>(threshold)) g.adjacency[a][b] = 1;
  return g;
}

std::vector<int> ham_path_contracted(const ContractedGraph& graph, int from, int to) {
  const auto& labels = graph.labels;
  auto index_of = [&](int label) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("label not in contracted graph");
    return static_cast<int>(it - labels.begin());
  };
  const int a = index_of(from);
  const int b = index_of(to);
  if (a == b) throw std::invalid_argument("contracted path endpoints must differ");
  detail::DenseGraph g(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (graph.adjacent(labels[i], labels[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  const auto found = detail::hamiltonian_path(g, g.all(), a, b);
  if (!found) throw NoPath("contracted graph has no Hamiltonian path between the labels");
  std::vector<int> out;
  for (int i : *found) out.push_back(labels[i]);
  return out;
}

Path stitch_region(const BCube& bc, std::span<const int> omega, const FaultSet& faults, int split_dim, NodeId s,
                   NodeId t, std::span<const int> label_path) {
  if (label_path.empty()) throw std::invalid_argument("empty label path");
  {
    std::vector<int> a(omega.begin(), omega.end());
    std::vector<int> b(label_path.begin(), label_path.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b || std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("label path must visit every label of the region once");
  }
  if (bc.digit(s, split_dim) != label_path.front() || bc.digit(t, split_dim) != label_path.back())
    throw std::invalid_argument("endpoints do not lie in the first and last subgraphs of the label path");
  if (label_path.size() == 1) return detail::intra_ham_path(bc, faults, split_dim, label_path.front(), s, t);
  const auto crossings = detail::choose_crossings(bc, faults, split_dim, s, t, label_path);
  if (!crossings) throw NoPath("no fault-free crossing sequence along the label path");
  return detail::fill_crossings(bc, faults, split_dim, label_path, *crossings);
}

Path ham_path_region(const BCube& bc, std::span<const int> omega, const FaultSet& faults, int split_dim, NodeId s,
                     NodeId t) {
  const int ls = bc.digit(s, split_dim);
  const int lt = bc.digit(t, split_dim);
  if (ls == lt) throw std::invalid_argument("region endpoints must lie in distinct subgraphs");
  if (std::find(omega.begin(), omega.end(), ls) == omega.end() ||
      std::find(omega.begin(), omega.end(), lt) == omega.end())
    throw std::invalid_argument("region endpoints must lie inside the region");
  const ContractedGraph contracted = contracted_graph(omega, faults, split_dim, 3);
  const auto labels = ham_path_contracted(contracted, ls, lt);
  return stitch_region(bc, omega, faults, split_dim, s, t, labels);
}

Path ham_path_bcube(const BCube& bc, const FaultSet& faults, NodeId s, NodeId t) {
  if (faults.dims() != bc.dims()) throw std::invalid_argument("fault set belongs to a different BCube");
  if (!bc.contains(s) || !bc.contains(t)) throw std::out_of_range("endpoint outside BCube");
  if (s == t) throw std::invalid_argument("Hamiltonian path endpoints must differ");
  if (bc.level() == 0) return ham_path_complete(bc.radix(), faults, s, t);

  const int d = split_dimension(faults);
  const int ls = bc.digit(s, d);
  if (ls != bc.digit(t, d)) return ham_path_region(bc, labels_except(bc.radix(), {}), faults, d, s, t);

  // Both ends in one subgraph: cover it first, then route a detour through
  // the other n-1 subgraphs across one edge of that path.
  const Path inner = detail::intra_ham_path(bc, faults, d, ls, s, t);
  const auto rest = labels_except(bc.radix(), {ls});
  const Path paths[] = {inner};
  const auto exit = detail::scan_exit_edge(bc, paths, rest, faults, d);
  if (!exit) throw NoPath("no exit edge on the intra-subgraph Hamiltonian path");
  const Path detour = ham_path_region(bc, rest, faults, d, bc.with_digit(exit->x, d, exit->l1),
                                      bc.with_digit(exit->x_star, d, exit->l2));
  return detail::splice(inner, exit->position, detour);
}

}  // namespace bcube
