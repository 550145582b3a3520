#include "bcube/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace bcube::oracle {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateNode: return "duplicate-node";
    case ViolationKind::NonAdjacentStep: return "non-adjacent-step";
    case ViolationKind::FaultyEdgeUsed: return "faulty-edge-used";
    case ViolationKind::WrongEndpoint: return "wrong-endpoint";
    case ViolationKind::NotDisjoint: return "not-disjoint";
    case ViolationKind::IncompleteCover: return "incomplete-cover";
  }
  return "?";
}

bool VerifyReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

namespace {

std::uint64_t total_nodes(Dims dims) {
  std::uint64_t total = 1;
  for (int i = 0; i <= dims.k; ++i) total *= static_cast<std::uint64_t>(dims.n);
  return total;
}

int differing_digits(Dims dims, std::uint32_t a, std::uint32_t b) {
  int diff = 0;
  for (int i = 0; i <= dims.k; ++i) {
    if (a % dims.n != b % dims.n) ++diff;
    a /= dims.n;
    b /= dims.n;
  }
  return diff;
}

std::string where(const char* what, std::size_t index, NodeId u) {
  return std::string(what) + " at index " + std::to_string(index) + " (node code " + std::to_string(u.code) + ")";
}

// Everything except the cover condition.
void check_walk(Dims dims, const Path& path, const FaultSet& faults, NodeId s, NodeId t, const char* name,
                VerifyReport& report) {
  auto add = [&](ViolationKind kind, std::string loc) {
    report.violations.push_back({kind, std::string(name) + ": " + std::move(loc)});
  };
  if (path.empty()) {
    add(ViolationKind::WrongEndpoint, "empty path");
    return;
  }
  if (path.front() != s) add(ViolationKind::WrongEndpoint, "starts at node code " + std::to_string(path.front().code));
  if (path.back() != t) add(ViolationKind::WrongEndpoint, "ends at node code " + std::to_string(path.back().code));

  const std::uint64_t total = total_nodes(dims);
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].code >= total) add(ViolationKind::IncompleteCover, where("node outside the graph", i, path[i]));
    if (!seen.insert(path[i].code).second) add(ViolationKind::DuplicateNode, where("repeated node", i, path[i]));
    if (i + 1 == path.size()) continue;
    if (differing_digits(dims, path[i].code, path[i + 1].code) != 1) {
      add(ViolationKind::NonAdjacentStep, where("step", i, path[i]));
    } else if (faults.contains(path[i], path[i + 1])) {
      add(ViolationKind::FaultyEdgeUsed, where("step", i, path[i]));
    }
  }
}

}  // namespace

VerifyReport verify_path(Dims dims, const Path& path, const FaultSet& faults, std::span<const NodeId> required_nodes,
                         NodeId s, NodeId t) {
  VerifyReport report;
  check_walk(dims, path, faults, s, t, "path", report);
  std::set<std::uint32_t> want;
  for (NodeId u : required_nodes) want.insert(u.code);
  std::set<std::uint32_t> got;
  for (NodeId u : path) got.insert(u.code);
  for (std::uint32_t c : want)
    if (!got.contains(c)) report.violations.push_back({ViolationKind::IncompleteCover, "missing node code " + std::to_string(c)});
  for (std::uint32_t c : got)
    if (!want.contains(c))
      report.violations.push_back({ViolationKind::IncompleteCover, "node code " + std::to_string(c) + " not required"});
  return report;
}

VerifyReport verify_2dpc(const Dpc& dpc, const FaultSet& faults, Dims dims, const EndpointQuad& q) {
  VerifyReport report;
  check_walk(dims, dpc.p1, faults, q.s1, q.t1, "p1", report);
  check_walk(dims, dpc.p2, faults, q.s2, q.t2, "p2", report);
  std::set<std::uint32_t> first(
      [&] {
        std::set<std::uint32_t> s;
        for (NodeId u : dpc.p1) s.insert(u.code);
        return s;
      }());
  std::set<std::uint32_t> covered = first;
  for (NodeId u : dpc.p2) {
    if (first.contains(u.code))
      report.violations.push_back({ViolationKind::NotDisjoint, "node code " + std::to_string(u.code) + " on both paths"});
    covered.insert(u.code);
  }
  const std::uint64_t total = total_nodes(dims);
  for (std::uint64_t c = 0; c < total; ++c)
    if (!covered.contains(static_cast<std::uint32_t>(c)))
      report.violations.push_back({ViolationKind::IncompleteCover, "node code " + std::to_string(c) + " uncovered"});
  return report;
}

SmallGraph::SmallGraph(int size) : size_(size), adj_(static_cast<std::size_t>(size), 0) {
  if (size < 0 || size > 64) throw InstanceTooLarge("small graphs hold at most 64 nodes");
}

SmallGraph SmallGraph::complete(int size) {
  SmallGraph g(size);
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b) g.connect(a, b);
  return g;
}

SmallGraph SmallGraph::bcube(Dims dims) {
  const std::uint64_t total = total_nodes(dims);
  if (total > 64) throw InstanceTooLarge("BC graph too large for exhaustive search");
  SmallGraph g(static_cast<int>(total));
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (differing_digits(dims, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) == 1) g.connect(a, b);
  return g;
}

SmallGraph SmallGraph::without(const FaultSet& faults) const {
  SmallGraph g = *this;
  for (const Edge& e : faults.edges()) g.disconnect(static_cast<int>(e.u.code), static_cast<int>(e.v.code));
  return g;
}

SmallGraph SmallGraph::without(std::span<const std::pair<int, int>> edges) const {
  SmallGraph g = *this;
  for (const auto& [a, b] : edges) g.disconnect(a, b);
  return g;
}

void SmallGraph::connect(int a, int b) {
  adj_[a] |= std::uint64_t{1} << b;
  adj_[b] |= std::uint64_t{1} << a;
}

void SmallGraph::disconnect(int a, int b) {
  adj_[a] &= ~(std::uint64_t{1} << b);
  adj_[b] &= ~(std::uint64_t{1} << a);
}

namespace {

using Bits = std::uint64_t;
constexpr Bits one(int v) { return Bits{1} << v; }

// Nodes reachable from `from` moving only through `allowed`.
Bits reach(const SmallGraph& g, Bits from, Bits allowed) {
  Bits seen = from;
  Bits frontier = from;
  while (frontier) {
    Bits next = 0;
    for (Bits f = frontier; f; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Depth-first Hamiltonian path search over `left` (unvisited nodes, target
// included) with reachability and degree pruning.
class HamDfs {
 public:
  HamDfs(const SmallGraph& g, int target, std::function<bool(std::vector<int>&)> done)
      : g_(g), target_(target), done_(std::move(done)) {}

  bool run(int start, Bits left) {
    path_.assign(1, start);
    return extend(start, left);
  }

 private:
  bool feasible(int cur, Bits left) const {
    if (!((left >> target_) & 1U)) return false;
    if (reach(g_, one(cur), left) != (left | one(cur))) return false;
    for (Bits r = left & ~one(target_); r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (std::popcount(g_.neighbours(v) & (left | one(cur))) < 2) return false;
    }
    return (g_.neighbours(target_) & (left | one(cur))) != 0;
  }

  bool extend(int cur, Bits left) {
    if (left == 0) return cur == target_ && done_(path_);
    if (cur == target_ || !feasible(cur, left)) return false;
    Bits cand = g_.neighbours(cur) & left;
    if (left != one(target_)) cand &= ~one(target_);
    for (; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      path_.push_back(v);
      if (extend(v, left & ~one(v))) return true;
      path_.pop_back();
    }
    return false;
  }

  const SmallGraph& g_;
  int target_;
  std::function<bool(std::vector<int>&)> done_;
  std::vector<int> path_;
};

Path to_path(const std::vector<int>& p) {
  Path out;
  for (int v : p) out.push_back(NodeId{static_cast<std::uint32_t>(v)});
  return out;
}

Bits all_nodes(const SmallGraph& g) { return g.size() == 64 ? ~Bits{0} : one(g.size()) - 1; }

// Grows p1 from s1 until t1, then hands the rest to a Hamiltonian search for
// p2. `visit` returns true to stop.
class DpcSearch {
 public:
  DpcSearch(const SmallGraph& g, const EndpointQuad& q, std::function<bool(const Dpc&)> visit)
      : g_(g),
        s1_(static_cast<int>(q.s1.code)),
        t1_(static_cast<int>(q.t1.code)),
        s2_(static_cast<int>(q.s2.code)),
        t2_(static_cast<int>(q.t2.code)),
        visit_(std::move(visit)) {}

  bool run() {
    p1_.assign(1, s1_);
    return grow(s1_, all_nodes(g_) & ~one(s1_));
  }

 private:
  bool grow(int cur, Bits left) {
    if (cur == t1_) return finish(left);
    // Everything left must stay attached to p1's head or to s2, and t1 must
    // stay reachable without passing through the second pair.
    const Bits open = left | one(cur);
    if (reach(g_, one(cur) | one(s2_), open) != open) return false;
    if (!((reach(g_, one(cur), open & ~one(s2_) & ~one(t2_)) >> t1_) & 1U)) return false;
    for (Bits cand = g_.neighbours(cur) & left & ~one(s2_) & ~one(t2_); cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      p1_.push_back(v);
      if (grow(v, left & ~one(v))) return true;
      p1_.pop_back();
    }
    return false;
  }

  bool finish(Bits left) {
    HamDfs second(g_, t2_, [&](std::vector<int>& p2) { return visit_(Dpc{to_path(p1_), to_path(p2)}); });
    return second.run(s2_, left & ~one(s2_));
  }

  const SmallGraph& g_;
  int s1_, t1_, s2_, t2_;
  std::function<bool(const Dpc&)> visit_;
  std::vector<int> p1_;
};

void check_quad(const SmallGraph& g, const EndpointQuad& q) {
  const NodeId all[] = {q.s1, q.t1, q.s2, q.t2};
  for (NodeId u : all)
    if (u.code >= static_cast<std::uint32_t>(g.size())) throw std::invalid_argument("endpoint outside graph");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (all[i] == all[j]) throw std::invalid_argument("the four endpoints must be distinct");
}

}  // namespace

std::optional<Path> brute_ham(const SmallGraph& g, NodeId s, NodeId t, int cap) {
  if (g.size() > cap) throw InstanceTooLarge("graph has " + std::to_string(g.size()) + " nodes, cap is " + std::to_string(cap));
  if (s.code >= static_cast<std::uint32_t>(g.size()) || t.code >= static_cast<std::uint32_t>(g.size()))
    throw std::invalid_argument("endpoint outside graph");
  if (s == t) return g.size() == 1 ? std::optional<Path>(Path{s}) : std::nullopt;
  std::optional<Path> found;
  HamDfs dfs(g, static_cast<int>(t.code), [&](std::vector<int>& p) {
    found = to_path(p);
    return true;
  });
  dfs.run(static_cast<int>(s.code), all_nodes(g) & ~one(static_cast<int>(s.code)));
  return found;
}

std::optional<Dpc> brute_2dpc(const SmallGraph& g, const EndpointQuad& q, int cap) {
  if (g.size() > cap) throw InstanceTooLarge("graph has " + std::to_string(g.size()) + " nodes, cap is " + std::to_string(cap));
  check_quad(g, q);
  std::optional<Dpc> found;
  DpcSearch search(g, q, [&](const Dpc& d) {
    found = d;
    return true;
  });
  search.run();
  return found;
}

std::size_t count_2dpc(const SmallGraph& g, const EndpointQuad& q, int cap) {
  if (g.size() > cap) throw InstanceTooLarge("graph has " + std::to_string(g.size()) + " nodes, cap is " + std::to_string(cap));
  check_quad(g, q);
  std::size_t count = 0;
  DpcSearch search(g, q, [&](const Dpc&) {
    ++count;
    return false;
  });
  search.run();
  return count;
}

}  // namespace bcube::oracle
