#include "search.hpp"

#include <bit>
#include <stdexcept>

namespace bcube::detail {

DenseGraph::DenseGraph(int n) : size(n), adj(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > 64) throw std::invalid_argument("dense graphs hold at most 64 vertices");
}

DenseGraph DenseGraph::complete(int n) {
  DenseGraph g(n);
  for (int v = 0; v < n; ++v) g.adj[v] = g.all() & ~bit(v);
  return g;
}

void DenseGraph::add_edge(int a, int b) {
  adj[a] |= bit(b);
  adj[b] |= bit(a);
}

void DenseGraph::remove_edge(int a, int b) {
  adj[a] &= ~bit(b);
  adj[b] &= ~bit(a);
}

namespace {

struct HamSearch {
  const DenseGraph& g;
  int target;
  const PathVisitor& visit;
  std::vector<int> path;

  // `left` holds the vertices not yet on the path; target stays in it until last.
  bool extend(int cur, Mask left) {
    if (left == 0) return cur == target && visit(path);
    if (cur == target) return false;
    if ((g.adj[target] & (left | bit(cur))) == 0) return false;
    Mask cand = g.adj[cur] & left;
    if (left != bit(target)) cand &= ~bit(target);
    while (cand) {
      const int next = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(next);
      if (extend(next, left & ~bit(next))) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

bool for_each_hamiltonian_path(const DenseGraph& g, Mask within, int s, int t, const PathVisitor& visit) {
  if (!((within >> s) & 1U) || !((within >> t) & 1U)) return false;
  if (s == t) {
    if (within != bit(s)) return false;
    return visit(std::vector<int>{s});
  }
  HamSearch search{g, t, visit, {s}};
  return search.extend(s, within & ~bit(s));
}

std::optional<std::vector<int>> hamiltonian_path(const DenseGraph& g, Mask within, int s, int t) {
  std::optional<std::vector<int>> found;
  for_each_hamiltonian_path(g, within, s, t, [&](const std::vector<int>& p) {
    found = p;
    return true;
  });
  return found;
}

bool for_each_paired_cover(const DenseGraph& g, int s1, int t1, int s2, int t2, const CoverVisitor& visit) {
  const Mask ends = bit(s1) | bit(t1) | bit(s2) | bit(t2);
  std::vector<int> rest;
  for (int v = 0; v < g.size; ++v)
    if (!((ends >> v) & 1U)) rest.push_back(v);
  if (rest.size() > 40) throw std::invalid_argument("paired cover enumeration limited to 44 vertices");

  const std::uint64_t splits = std::uint64_t{1} << rest.size();
  for (std::uint64_t sel = 0; sel < splits; ++sel) {
    Mask side1 = bit(s1) | bit(t1);
    Mask side2 = bit(s2) | bit(t2);
    for (std::size_t i = 0; i < rest.size(); ++i) ((sel >> i) & 1U ? side1 : side2) |= bit(rest[i]);
    if (!hamiltonian_path(g, side2, s2, t2)) continue;
    const bool stopped = for_each_hamiltonian_path(g, side1, s1, t1, [&](const std::vector<int>& p1) {
      return for_each_hamiltonian_path(g, side2, s2, t2, [&](const std::vector<int>& p2) { return visit(p1, p2); });
    });
    if (stopped) return true;
  }
  return false;
}

}  // namespace bcube::detail
