#pragma once

#include <cstdint>

namespace bcube::counting {

// Exact integer surpluses behind the existence steps of the 2-DPC
// construction, with |F_k| replaced by its budget f(k). A positive surplus
// means the corresponding choice cannot be blocked by faults.

/// n^k - f(k): fault-free edges left between any two subgraphs.
std::int64_t pair_residual(int n, int k);

/// ceil((n^k - 2)/2) * |omega| - f(k): disjoint path-edge pairs times target
/// subgraphs, minus faults (exit edge of a 2-DPC inside one subgraph).
std::int64_t exit_pair(int n, int k, int omega_size);

/// (n^k - 3)(n - 2) - f(k): escape node beside s1, s2, t1.
std::int64_t three_same_escape(int n, int k);

/// (n^k - 2)(n - 2) - f(k): first escape node beside s1, s2.
std::int64_t paired_first_escape(int n, int k);

/// (n^k - 3)(n - 3) - f(k): second escape node into a fresh subgraph.
std::int64_t paired_second_escape(int n, int k);

/// ceil(((n-1) n^k - 1)/2) - 2(n - 1) - f(k): bridge edge into the
/// subgraph holding two endpoints.
std::int64_t bridge(int n, int k);

/// ceil((n^k - 1)/2)(n - 2) - f(k): exit edge on a Hamiltonian path of one
/// subgraph into two subgraphs outside both matched pairs.
std::int64_t matched_exit(int n, int k);

/// (n - 3)(n^k - 1) - f(k): faults needed to spoil the contracted 2-DPC.
std::int64_t contracted_cover(int n, int k);

/// (n - 5)(n^k - 2) - f(k): faults needed to spoil Hamiltonian connectivity
/// of the contracted graph on n - 2 labels.
std::int64_t contracted_path(int n, int k);

}  // namespace bcube::counting
