#include "bcube/dpc.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <utility>

#include "region.hpp"
#include "search.hpp"

namespace bcube {

void validate_quad(const BCube& bc, const EndpointQuad& q) {
  const NodeId all[] = {q.s1, q.t1, q.s2, q.t2};
  for (NodeId u : all)
    if (!bc.contains(u)) throw std::invalid_argument("endpoint outside BCube");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (all[i] == all[j]) throw std::invalid_argument("the four endpoints must be distinct");
}

std::string_view to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::AllSame: return "AllSame";
    case CaseKind::ThreeSame: return "ThreeSame";
    case CaseKind::PairSources: return "PairSources";
    case CaseKind::PairCross: return "PairCross";
    case CaseKind::PairMatched: return "PairMatched";
    case CaseKind::AllDistinct: return "AllDistinct";
  }
  return "?";
}

EndpointQuad Transform::apply(const EndpointQuad& q) const {
  EndpointQuad r = swap_pairs ? EndpointQuad{q.s2, q.t2, q.s1, q.t1} : q;
  if (reverse_first) std::swap(r.s1, r.t1);
  if (reverse_second) std::swap(r.s2, r.t2);
  return r;
}

Dpc Transform::undo(Dpc d) const {
  if (reverse_first) std::reverse(d.p1.begin(), d.p1.end());
  if (reverse_second) std::reverse(d.p2.begin(), d.p2.end());
  if (swap_pairs) std::swap(d.p1, d.p2);
  return d;
}

Transform transform_by_index(int index) {
  return Transform{(index & 4) != 0, (index & 2) != 0, (index & 1) != 0};
}

CaseTag classify(const BCube& bc, const EndpointQuad& q, int split_dim) {
  auto lab = [&](NodeId u) { return bc.digit(u, split_dim); };
  const int s1 = lab(q.s1), t1 = lab(q.t1), s2 = lab(q.s2), t2 = lab(q.t2);

  const int ls[] = {s1, t1, s2, t2};
  int most = 0;
  for (int l : ls) most = std::max(most, static_cast<int>(std::count(std::begin(ls), std::end(ls), l)));
  std::vector<int> sorted(std::begin(ls), std::end(ls));
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();

  CaseTag tag;
  if (distinct == 1) return CaseTag{CaseKind::AllSame, {}};
  if (distinct == 4) return CaseTag{CaseKind::AllDistinct, {}};
  if (most == 3) {
    tag.kind = CaseKind::ThreeSame;
  } else if (s1 == s2 || t1 == t2) {
    tag.kind = CaseKind::PairSources;
  } else if (s1 == t2 || s2 == t1) {
    tag.kind = CaseKind::PairCross;
  } else {
    tag.kind = CaseKind::PairMatched;
  }

  for (int i = 0; i < 8; ++i) {
    const Transform tr = transform_by_index(i);
    const EndpointQuad n = tr.apply(q);
    const int a = lab(n.s1), b = lab(n.t1), c = lab(n.s2), d = lab(n.t2);
    bool ok = false;
    switch (tag.kind) {
      case CaseKind::ThreeSame: ok = a == c && a == b && d != a; break;
      case CaseKind::PairSources:
      case CaseKind::PairCross: ok = a == c && b != a && d != a; break;
      case CaseKind::PairMatched: ok = a == b && c != a && d != a; break;
      default: break;
    }
    if (ok) {
      tag.transform = tr;
      return tag;
    }
  }
  throw std::logic_error("no symmetry reaches the canonical layout");
}

Dpc dpc_complete(int n, const FaultSet& faults, const EndpointQuad& q) {
  if (faults.dims() != Dims{n, 0}) throw std::invalid_argument("complete-graph faults must live on BC(n,0)");
  validate_quad(BCube(Dims{n, 0}), q);
  auto g = detail::DenseGraph::complete(n);
  for (const Edge& e : faults.edges()) g.remove_edge(static_cast<int>(e.u.code), static_cast<int>(e.v.code));
  std::optional<Dpc> found;
  auto as_path = [](const std::vector<int>& p) {
    Path out;
    for (int v : p) out.push_back(NodeId{static_cast<std::uint32_t>(v)});
    return out;
  };
  detail::for_each_paired_cover(g, static_cast<int>(q.s1.code), static_cast<int>(q.t1.code),
                                static_cast<int>(q.s2.code), static_cast<int>(q.t2.code),
                                [&](const std::vector<int>& p1, const std::vector<int>& p2) {
                                  found = Dpc{as_path(p1), as_path(p2)};
                                  return true;
                                });
  if (!found) throw NoDpc("K_" + std::to_string(n) + " - F has no paired 2-DPC for this quadruple");
  return *found;
}

ExitPair find_exit_pair(const BCube& bc, std::span<const Path> paths, std::span<const int> omega,
                        const FaultSet& faults, int split_dim) {
  const auto e = detail::scan_exit_edge(bc, paths, omega, faults, split_dim);
  if (!e) throw NotFound("no exit edge with fault-free crossings into two distinct subgraphs");
  return ExitPair{e->x, e->x_star, e->l1, e->l2, e->path_index, e->position};
}

EscapeNode find_escape_node(const BCube& bc, int label, std::span<const NodeId> avoid, std::span<const int> targets,
                            const FaultSet& faults, int split_dim) {
  for (NodeId x : bc.subgraph_nodes(split_dim, label)) {
    if (std::find(avoid.begin(), avoid.end(), x) != avoid.end()) continue;
    for (int l : targets) {
      if (l == label) continue;
      if (!faults.contains(x, bc.with_digit(x, split_dim, l))) return EscapeNode{x, l};
    }
  }
  throw NotFound("no escape node with a fault-free crossing into the target subgraphs");
}

BridgeEdge find_bridge_edge(const BCube& bc, const Path& h, int target_label, std::span<const NodeId> forbidden_far,
                            const FaultSet& faults, int split_dim) {
  auto usable = [&](NodeId u, NodeId far) {
    return !faults.contains(u, far) &&
           std::find(forbidden_far.begin(), forbidden_far.end(), far) == forbidden_far.end();
  };
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    const NodeId z = h[i];
    const NodeId zs = h[i + 1];
    if (bc.digit(z, split_dim) == target_label || bc.digit(zs, split_dim) == target_label)
      throw std::invalid_argument("bridge search path enters the target subgraph");
    // A split-dimension step has both crossings landing on the same node.
    if (bc.digit(z, split_dim) != bc.digit(zs, split_dim)) continue;
    const NodeId fz = bc.with_digit(z, split_dim, target_label);
    const NodeId fzs = bc.with_digit(zs, split_dim, target_label);
    if (usable(z, fz) && usable(zs, fzs)) return BridgeEdge{i, z, zs};
  }
  throw NotFound("no bridge edge into the target subgraph");
}

namespace {

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

Path concat(Path a, const Path& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class DpcBuilder {
 public:
  DpcBuilder(const BCube& bc, const FaultSet& faults, CaseTrace* trace) : bc_(bc), faults_(faults), trace_(trace) {}

  Dpc build(const EndpointQuad& q) {
    validate_quad(bc_, q);
    if (bc_.level() == 0) {
      record(CaseTag{}, -1, "base");
      return dpc_complete(bc_.radix(), faults_, q);
    }
    // The heaviest dimension first. The others are only tried when that
    // fails, and only if every subgraph along them is still within budget.
    const std::vector<int> order = split_order();
    const std::size_t mark = trace_ ? trace_->size() : 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && !projections_within_budget(order[i])) continue;
      d_ = order[i];
      try {
        Dpc r = build_along(q);
        if (i > 0 && trace_) (*trace_)[mark].branch += "+resplit";
        return r;
      } catch (const ConstructionError&) {
        if (i == 0) first_error_ = std::current_exception();
        if (trace_) trace_->resize(mark);
      }
    }
    std::rethrow_exception(first_error_);
  }

 private:
  Dpc build_along(const EndpointQuad& q) {
    const CaseTag tag = classify(bc_, q, d_);
    const EndpointQuad nq = tag.transform.apply(q);
    Dpc r;
    switch (tag.kind) {
      case CaseKind::AllSame: r = all_same(tag, nq); break;
      case CaseKind::ThreeSame: r = three_same(tag, nq); break;
      case CaseKind::PairSources:
      case CaseKind::PairCross: r = pair_sources(tag, nq); break;
      case CaseKind::PairMatched: r = pair_matched(tag, nq); break;
      case CaseKind::AllDistinct: r = all_distinct(tag, nq); break;
    }
    return tag.transform.undo(std::move(r));
  }

  std::vector<int> split_order() const {
    std::vector<int> order;
    order.push_back(split_dimension(faults_));
    std::vector<int> rest;
    for (int i = bc_.level(); i >= 0; --i)
      if (i != order[0]) rest.push_back(i);
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return faults_.count(a) > faults_.count(b); });
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
  }

  bool projections_within_budget(int dim) const {
    for (int m = 0; m < bc_.radix(); ++m)
      if (!is_f_pef(subgraph_faults(faults_, m, dim))) return false;
    return true;
  }

  int lab(NodeId u) const { return bc_.digit(u, d_); }
  NodeId cross(NodeId u, int label) const { return bc_.with_digit(u, d_, label); }

  std::size_t record(const CaseTag& tag, int split_dim, std::string branch) {
    if (!trace_) return 0;
    trace_->push_back(TraceEntry{bc_.level(), split_dim, tag.kind, tag.transform, std::move(branch)});
    return trace_->size() - 1;
  }
  void mark_forced(std::size_t entry) {
    if (trace_) (*trace_)[entry].branch += "+forced";
  }

  Dpc intra_dpc(int label, const EndpointQuad& q) const {
    const SubgraphProjection proj(bc_, d_, label);
    const FaultSet inner = subgraph_faults(faults_, label, d_);
    const EndpointQuad sq{proj.to_sub(q.s1), proj.to_sub(q.t1), proj.to_sub(q.s2), proj.to_sub(q.t2)};
    Dpc r = DpcBuilder(proj.sub(), inner, trace_).build(sq);
    for (NodeId& u : r.p1) u = proj.to_parent(u);
    for (NodeId& u : r.p2) u = proj.to_parent(u);
    return r;
  }

  Dpc all_same(const CaseTag& tag, const EndpointQuad& q) {
    record(tag, d_, "1");
    const int a = lab(q.s1);
    Dpc inner = intra_dpc(a, q);
    const auto omega = labels_except(bc_.radix(), {a});
    const Path paths[] = {inner.p1, inner.p2};
    const ExitPair e = find_exit_pair(bc_, paths, omega, faults_, d_);
    const Path detour = ham_path_region(bc_, omega, faults_, d_, cross(e.x, e.l1), cross(e.x_star, e.l2));
    Path& host = e.path_index == 0 ? inner.p1 : inner.p2;
    host = detail::splice(host, e.position, detour);
    return inner;
  }

  Dpc three_same(const CaseTag& tag, const EndpointQuad& q) {
    record(tag, d_, "2");
    const int a = lab(q.s1);
    const int b = lab(q.t2);
    const NodeId avoid[] = {q.s1, q.s2, q.t1};
    const auto targets = labels_except(bc_.radix(), {a, b});
    const EscapeNode x = find_escape_node(bc_, a, avoid, targets, faults_, d_);
    Dpc inner = intra_dpc(a, EndpointQuad{q.s1, q.t1, q.s2, x.x});
    const Path tail = ham_path_region(bc_, labels_except(bc_.radix(), {a}), faults_, d_, cross(x.x, x.label), q.t2);
    inner.p2 = concat(std::move(inner.p2), tail);
    return inner;
  }

  Dpc pair_sources(const CaseTag& tag, const EndpointQuad& q) {
    const int a = lab(q.s1);
    const int b = lab(q.t1);
    if (b == lab(q.t2)) return pair_sources_paired_targets(tag, q, a, b);

    // s1, s2 in BC[a]; t1, t2 in two further subgraphs.
    const std::size_t entry = record(tag, d_, "3.1(2)");
    try {
      return pair_sources_bridged(q, a, entry);
    } catch (const ConstructionError&) {
      return pair_sources_direct(q, a, b, entry);
    }
  }

  Dpc pair_sources_bridged(const EndpointQuad& q, int a, std::size_t entry) {
    const auto omega = labels_except(bc_.radix(), {a});
    Path h = ham_path_region(bc_, omega, faults_, d_, q.t1, q.t2);
    const NodeId forbidden[] = {q.s1, q.s2};
    const BridgeEdge br = bridge(h, omega, a, forbidden, entry);
    const Path h1(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(br.position + 1));  // t1 .. z
    const Path h2(h.begin() + static_cast<std::ptrdiff_t>(br.position + 1), h.end());    // z* .. t2
    const Dpc inner = intra_dpc(a, EndpointQuad{q.s1, cross(br.z, a), q.s2, cross(br.z_star, a)});
    return Dpc{concat(inner.p1, reversed(h1)), concat(inner.p2, h2)};
  }

  Dpc pair_sources_paired_targets(const CaseTag& tag, const EndpointQuad& q, int a, int b) {
    const std::size_t entry = record(tag, d_, "3.1(1)");
    try {
      return paired_targets_bridged(q, a, b, entry);
    } catch (const ConstructionError&) {
      return pair_sources_direct(q, a, b, entry);
    }
  }

  Dpc paired_targets_bridged(const EndpointQuad& q, int a, int b, std::size_t entry) {
    const auto targets = labels_except(bc_.radix(), {a, b});
    const NodeId avoid_x[] = {q.s1, q.s2};
    const EscapeNode x = find_escape_node(bc_, a, avoid_x, targets, faults_, d_);
    const NodeId avoid_y[] = {q.s1, q.s2, x.x};
    const auto targets_y = labels_except(bc_.radix(), {a, b, x.label});
    const EscapeNode y = find_escape_node(bc_, a, avoid_y, targets_y, faults_, d_);

    const Dpc inner = intra_dpc(a, EndpointQuad{q.s1, x.x, q.s2, y.x});
    const Path mid = ham_path_region(bc_, targets, faults_, d_, cross(x.x, x.label), cross(y.x, y.label));
    // s1 .. x, H, y .. s2: Hamiltonian path of every subgraph except BC[b].
    Path h = concat(concat(inner.p1, mid), reversed(inner.p2));

    const NodeId forbidden[] = {q.t1, q.t2};
    const BridgeEdge br = bridge(h, targets, b, forbidden, entry);
    const Path h1(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(br.position + 1));         // s1 .. z
    const Path h2 = reversed(Path(h.begin() + static_cast<std::ptrdiff_t>(br.position + 1), h.end()));  // s2 .. z*
    const Dpc tail = intra_dpc(b, EndpointQuad{cross(br.z, b), q.t1, cross(br.z_star, b), q.t2});
    return Dpc{concat(h1, tail.p1), concat(h2, tail.p2)};
  }

  // Used when no bridge edge can be found for Case 3.1. p1 leaves BC[a] at an
  // inner node z and crosses straight into BC[b]. p2 escapes at x, sweeps the
  // subgraphs outside a and b, then either ends at t2 or, when t2 is in BC[b]
  // too, crosses into BC[b] from a node w.
  Dpc pair_sources_direct(const EndpointQuad& q, int a, int b, std::size_t entry) {
    constexpr int kAttempts = 400;
    const bool paired_targets = lab(q.t2) == b;
    const auto rest = labels_except(bc_.radix(), {a, b});
    auto rewind = [&] {
      if (trace_) trace_->resize(entry + 1);
    };
    rewind();
    if (trace_) {
      std::string& branch = (*trace_)[entry].branch;
      branch = branch.substr(0, branch.find('+')) + "+direct";
    }
    int attempts = 0;
    for (NodeId z : bc_.subgraph_nodes(d_, a)) {
      const NodeId zb = cross(z, b);
      if (z == q.s1 || z == q.s2 || faults_.contains(z, zb) || zb == q.t1 || zb == q.t2) continue;
      for (NodeId x : bc_.subgraph_nodes(d_, a)) {
        if (x == q.s1 || x == q.s2 || x == z) continue;
        for (int c : rest) {
          const NodeId xc = cross(x, c);
          if (faults_.contains(x, xc) || (!paired_targets && c == lab(q.t2))) continue;
          if (++attempts > kAttempts) throw NotFound("no direct crossing layout for Case 3.1");
          try {
            Dpc head = intra_dpc(a, EndpointQuad{q.s1, z, q.s2, x});
            if (!paired_targets) {
              const Path sweep = ham_path_region(bc_, rest, faults_, d_, xc, q.t2);
              const Path tail = detail::intra_ham_path(bc_, faults_, d_, b, zb, q.t1);
              return Dpc{concat(head.p1, tail), concat(head.p2, sweep)};
            }
            for (int c2 : rest) {
              if (c2 == c) continue;
              for (NodeId w : bc_.subgraph_nodes(d_, c2)) {
                const NodeId wb = cross(w, b);
                if (faults_.contains(w, wb) || wb == q.t1 || wb == q.t2 || wb == zb) continue;
                const std::size_t mark = trace_ ? trace_->size() : 0;
                try {
                  const Path sweep = ham_path_region(bc_, rest, faults_, d_, xc, w);
                  const Dpc tail = intra_dpc(b, EndpointQuad{zb, q.t1, wb, q.t2});
                  return Dpc{concat(head.p1, tail.p1), concat(concat(head.p2, sweep), tail.p2)};
                } catch (const ConstructionError&) {
                  if (trace_) trace_->resize(mark);
                }
              }
            }
          } catch (const ConstructionError&) {
          }
          rewind();
        }
      }
    }
    throw NotFound("no direct crossing layout for Case 3.1");
  }

  // Bridge edge on h into BC[target]. When the scan fails, one subgraph run
  // of h (a full Hamiltonian path of some BC[c], c in rerouteable) is rebuilt
  // as a 2-DPC entry -> z, z* -> exit so that (z,z*) becomes a bridge.
  BridgeEdge bridge(Path& h, std::span<const int> rerouteable, int target, std::span<const NodeId> forbidden,
                    std::size_t trace_entry) {
    try {
      return find_bridge_edge(bc_, h, target, forbidden, faults_, d_);
    } catch (const NotFound&) {
    }
    mark_forced(trace_entry);
    const std::size_t block = bc_.node_count() / static_cast<std::uint64_t>(bc_.radix());
    auto usable = [&](NodeId u) {
      const NodeId far = cross(u, target);
      return !faults_.contains(u, far) && std::find(forbidden.begin(), forbidden.end(), far) == forbidden.end();
    };
    std::size_t i = 0;
    while (i < h.size()) {
      std::size_t j = i;
      while (j + 1 < h.size() && lab(h[j + 1]) == lab(h[i])) ++j;
      const int c = lab(h[i]);
      const bool full = j - i + 1 == block;
      if (full && std::find(rerouteable.begin(), rerouteable.end(), c) != rerouteable.end()) {
        const NodeId entry = h[i];
        const NodeId exit = h[j];
        for (NodeId z : bc_.subgraph_nodes(d_, c)) {
          if (z == entry || z == exit || !usable(z)) continue;
          for (int dim = 0; dim <= bc_.level(); ++dim) {
            if (dim == d_) continue;
            for (int v = 0; v < bc_.radix(); ++v) {
              if (v == bc_.digit(z, dim)) continue;
              const NodeId zs = bc_.with_digit(z, dim, v);
              if (zs == entry || zs == exit || faults_.contains(z, zs) || !usable(zs)) continue;
              Dpc split;
              try {
                split = intra_dpc(c, EndpointQuad{entry, z, zs, exit});
              } catch (const ConstructionError&) {
                continue;
              }
              Path rebuilt(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(i));
              const std::size_t pos = rebuilt.size() + split.p1.size() - 1;
              rebuilt = concat(concat(std::move(rebuilt), split.p1), split.p2);
              rebuilt.insert(rebuilt.end(), h.begin() + static_cast<std::ptrdiff_t>(j + 1), h.end());
              h = std::move(rebuilt);
              return BridgeEdge{pos, z, zs};
            }
          }
        }
      }
      i = j + 1;
    }
    throw NotFound("no bridge edge into the target subgraph, even after re-routing");
  }

  Dpc pair_matched(const CaseTag& tag, const EndpointQuad& q) {
    record(tag, d_, "3.2(2)");
    const int a = lab(q.s1);
    const int b = lab(q.s2);
    Path h1 = detail::intra_ham_path(bc_, faults_, d_, a, q.s1, q.t1);
    if (b != lab(q.t2)) {
      return Dpc{std::move(h1), ham_path_region(bc_, labels_except(bc_.radix(), {a}), faults_, d_, q.s2, q.t2)};
    }
    const Path h2 = detail::intra_ham_path(bc_, faults_, d_, b, q.s2, q.t2);
    const auto omega = labels_except(bc_.radix(), {a, b});
    const Path paths[] = {h2};
    const ExitPair e = find_exit_pair(bc_, paths, omega, faults_, d_);
    const Path detour = ham_path_region(bc_, omega, faults_, d_, cross(e.x, e.l1), cross(e.x_star, e.l2));
    return Dpc{std::move(h1), detail::splice(h2, e.position, detour)};
  }

  Dpc all_distinct(const CaseTag& tag, const EndpointQuad& q) {
    record(tag, d_, "4");
    const int n = bc_.radix();
    const ContractedGraph c = contracted_graph(labels_except(n, {}), faults_, d_, 2);
    detail::DenseGraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (c.adjacent(i, j)) g.add_edge(i, j);

    // Label-level covers come in dpc_complete order; the first one whose
    // crossings can all be placed is expanded.
    constexpr std::size_t kCoverBudget = 20000;
    std::size_t tried = 0;
    std::optional<Dpc> out;
    detail::for_each_paired_cover(
        g, lab(q.s1), lab(q.t1), lab(q.s2), lab(q.t2), [&](const std::vector<int>& l1, const std::vector<int>& l2) {
          if (++tried > kCoverBudget) return true;
          const auto c1 = detail::choose_crossings(bc_, faults_, d_, q.s1, q.t1, l1);
          if (!c1) return false;
          const auto c2 = detail::choose_crossings(bc_, faults_, d_, q.s2, q.t2, l2);
          if (!c2) return false;
          out = Dpc{detail::fill_crossings(bc_, faults_, d_, l1, *c1), detail::fill_crossings(bc_, faults_, d_, l2, *c2)};
          return true;
        });
    if (!out) throw NoDpc("no label-level 2-DPC of the contracted graph admits fault-free crossings");
    return *out;
  }

  const BCube& bc_;
  const FaultSet& faults_;
  CaseTrace* trace_;
  std::exception_ptr first_error_;
  int d_ = 0;
};

}  // namespace

Dpc dpc_bcube(const BCube& bc, const FaultSet& faults, const EndpointQuad& q, CaseTrace* trace) {
  if (faults.dims() != bc.dims()) throw std::invalid_argument("fault set belongs to a different BCube");
  try {
    return DpcBuilder(bc, faults, trace).build(q);
  } catch (const NoDpc&) {
    throw;
  } catch (const ConstructionError& e) {
    throw NoDpc(e.what());
  }
}

}  // namespace bcube
