#include "bcube/counting.hpp"

#include "bcube/pef.hpp"

namespace bcube::counting {

namespace {

std::int64_t ipow(int n, int k) {
  std::int64_t p = 1;
  for (int i = 0; i < k; ++i) p *= n;
  return p;
}

std::int64_t ceil_half(std::int64_t v) { return (v + 1) / 2; }

}  // namespace

std::int64_t pair_residual(int n, int k) { return ipow(n, k) - budget(n, k); }

std::int64_t exit_pair(int n, int k, int omega_size) {
  return ceil_half(ipow(n, k) - 2) * omega_size - budget(n, k);
}

std::int64_t three_same_escape(int n, int k) { return (ipow(n, k) - 3) * (n - 2) - budget(n, k); }

std::int64_t paired_first_escape(int n, int k) { return (ipow(n, k) - 2) * (n - 2) - budget(n, k); }

std::int64_t paired_second_escape(int n, int k) { return (ipow(n, k) - 3) * (n - 3) - budget(n, k); }

std::int64_t bridge(int n, int k) { return ceil_half((n - 1) * ipow(n, k) - 1) - 2 * (n - 1) - budget(n, k); }

std::int64_t matched_exit(int n, int k) { return ceil_half(ipow(n, k) - 1) * (n - 2) - budget(n, k); }

std::int64_t contracted_cover(int n, int k) { return (n - 3) * (ipow(n, k) - 1) - budget(n, k); }

std::int64_t contracted_path(int n, int k) { return (n - 5) * (ipow(n, k) - 2) - budget(n, k); }

}  // namespace bcube::counting
