#include "region.hpp"

#include <algorithm>

namespace bcube::detail {

Path intra_ham_path(const BCube& bc, const FaultSet& faults, int split_dim, int label, NodeId from, NodeId to) {
  const SubgraphProjection proj(bc, split_dim, label);
  const FaultSet inner = subgraph_faults(faults, label, split_dim);
  Path sub = ham_path_bcube(proj.sub(), inner, proj.to_sub(from), proj.to_sub(to));
  for (NodeId& u : sub) u = proj.to_parent(u);
  return sub;
}

namespace {

constexpr std::size_t kCrossingBudget = 200000;

struct CrossingSearch {
  const BCube& bc;
  const FaultSet& faults;
  int split_dim;
  NodeId target;
  std::span<const int> labels;
  std::vector<Crossing> chosen;
  std::size_t steps = 0;

  bool place(std::size_t i, NodeId entry) {
    if (++steps > kCrossingBudget) return false;
    if (i + 1 == labels.size()) {
      if (entry == target) return false;
      chosen.push_back({entry, target});
      return true;
    }
    const int next = labels[i + 1];
    const bool next_is_last = i + 2 == labels.size();
    for (NodeId x : bc.subgraph_nodes(split_dim, labels[i])) {
      if (x == entry) continue;
      const NodeId far = bc.with_digit(x, split_dim, next);
      if (faults.contains(x, far)) continue;
      if (next_is_last && far == target) continue;
      chosen.push_back({entry, x});
      if (place(i + 1, far)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Crossing>> choose_crossings(const BCube& bc, const FaultSet& faults, int split_dim, NodeId s,
                                                      NodeId t, std::span<const int> label_path) {
  if (label_path.empty()) return std::nullopt;
  CrossingSearch search{bc, faults, split_dim, t, label_path, {}, 0};
  if (!search.place(0, s)) return std::nullopt;
  return std::move(search.chosen);
}

Path fill_crossings(const BCube& bc, const FaultSet& faults, int split_dim, std::span<const int> label_path,
                    std::span<const Crossing> crossings) {
  Path out;
  out.reserve(bc.node_count());
  for (std::size_t i = 0; i < label_path.size(); ++i) {
    const Path part = intra_ham_path(bc, faults, split_dim, label_path[i], crossings[i].entry, crossings[i].exit);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<ExitEdge> scan_exit_edge(const BCube& bc, std::span<const Path> paths, std::span<const int> omega,
                                       const FaultSet& faults, int split_dim) {
  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const Path& p = paths[pi];
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const NodeId x = p[i];
      const NodeId xs = p[i + 1];
      for (int l1 : omega) {
        if (bc.digit(x, split_dim) == l1 || faults.contains(x, bc.with_digit(x, split_dim, l1))) continue;
        for (int l2 : omega) {
          if (l2 == l1 || bc.digit(xs, split_dim) == l2) continue;
          if (faults.contains(xs, bc.with_digit(xs, split_dim, l2))) continue;
          return ExitEdge{pi, i, x, xs, l1, l2};
        }
      }
    }
  }
  return std::nullopt;
}

Path splice(const Path& p, std::size_t position, const Path& detour) {
  Path out;
  out.reserve(p.size() + detour.size());
  out.insert(out.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(position + 1));
  out.insert(out.end(), detour.begin(), detour.end());
  out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(position + 1), p.end());
  return out;
}

}  // namespace bcube::detail
