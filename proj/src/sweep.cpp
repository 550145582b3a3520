#include "bcube/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "bcube/dpc.hpp"
#include "bcube/hampath.hpp"
#include "bcube/io.hpp"
#include "bcube/oracle.hpp"
#include "bcube/pef.hpp"

namespace bcube {

namespace {

struct Instance {
  Dims dims;
  double fill = 0;
  int index = 0;
  std::uint64_t seed = 0;
  FaultSet faults;
  std::uint64_t first_trial = 0;
  std::uint64_t trials = 0;
};

int arity(SweepMode mode) { return mode == SweepMode::Dpc ? 4 : 2; }

std::uint64_t ordered_tuples(std::uint64_t n, int r) {
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= n - i;
  return total;
}

// index-th ordered r-tuple of distinct nodes in lexicographic order.
std::vector<NodeId> decode_tuple(std::uint64_t n, int r, std::uint64_t index) {
  std::vector<std::uint32_t> free(n);
  for (std::uint32_t i = 0; i < n; ++i) free[i] = i;
  std::vector<NodeId> out;
  for (int i = 0; i < r; ++i) {
    const std::uint64_t block = ordered_tuples(n - 1 - i, r - 1 - i);
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    out.push_back(NodeId{free[pick]});
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::vector<NodeId> random_tuple(std::uint64_t n, int r, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  std::vector<NodeId> out;
  while (static_cast<int>(out.size()) < r) {
    NodeId u{static_cast<std::uint32_t>(pick(rng))};
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

io::json run_trial(const SweepConfig& config, const Instance& inst, std::uint64_t trial, bool& verified) {
  const BCube bc(inst.dims);
  const std::uint64_t local = trial - inst.first_trial;
  const int r = arity(config.mode);
  const std::vector<NodeId> ends = config.all_quads ? decode_tuple(bc.node_count(), r, local)
                                                    : random_tuple(bc.node_count(), r, inst.seed, local);
  io::json rec = {{"trial", trial},
                  {"n", inst.dims.n},
                  {"k", inst.dims.k},
                  {"fill", inst.fill},
                  {"instance", inst.index},
                  {"seed", inst.seed},
                  {"faults", inst.faults.size()}};
  const auto start = std::chrono::steady_clock::now();
  verified = false;
  try {
    if (config.mode == SweepMode::Dpc) {
      const EndpointQuad q{ends[0], ends[1], ends[2], ends[3]};
      rec["quad"] = io::quad_to_json(bc, q);
      CaseTrace trace;
      const Dpc d = dpc_bcube(bc, inst.faults, q, &trace);
      rec["case_trace"] = io::trace_to_json(trace);
      const auto report = oracle::verify_2dpc(d, inst.faults, inst.dims, q);
      verified = report.ok();
      if (!verified) rec["report"] = io::report_to_json(report);
    } else {
      rec["s"] = bc.format(ends[0]);
      rec["t"] = bc.format(ends[1]);
      const Path p = ham_path_bcube(bc, inst.faults, ends[0], ends[1]);
      std::vector<NodeId> all(bc.node_count());
      for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = NodeId{i};
      const auto report = oracle::verify_path(inst.dims, p, inst.faults, all, ends[0], ends[1]);
      verified = report.ok();
      if (!verified) rec["report"] = io::report_to_json(report);
    }
  } catch (const ConstructionError& e) {
    rec["error"] = e.what();
  }
  rec["verified"] = verified;
  if (config.timing) {
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    rec["elapsed_ms"] = ms.count();
  }
  return rec;
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& config, std::ostream* out) {
  if (config.dims.empty() || config.fills.empty() || config.instances < 1)
    throw std::invalid_argument("sweep matrix is empty");
  if (!config.all_quads && config.quads < 1) throw std::invalid_argument("need at least one endpoint set per instance");

  std::vector<Instance> instances;
  std::uint64_t total = 0;
  for (Dims dims : config.dims) {
    if (dims.n < 4 || dims.k < 0) throw std::invalid_argument("sweeps need n >= 4 and k >= 0");
    const std::uint64_t nodes = node_count(dims);
    if (config.all_quads && nodes > 64) throw std::invalid_argument("exhaustive endpoint sweeps are limited to 64 nodes");
    for (double fill : config.fills) {
      for (int i = 0; i < config.instances; ++i) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
        Instance inst{dims, fill, i, seed, gen_random_pef(dims, fill, seed), total, 0};
        inst.trials = config.all_quads ? ordered_tuples(nodes, arity(config.mode)) : config.quads;
        total += inst.trials;
        instances.push_back(std::move(inst));
      }
    }
  }

  std::vector<std::string> records(out ? total : 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> ok{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < total; t = next++) {
      auto it = std::upper_bound(instances.begin(), instances.end(), t,
                                 [](std::uint64_t v, const Instance& in) { return v < in.first_trial; });
      bool verified = false;
      io::json rec = run_trial(config, *std::prev(it), t, verified);
      if (verified) ++ok;
      if (out) records[t] = rec.dump();
    }
  };
  const int jobs = std::max(1, config.jobs);
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  if (out)
    for (const std::string& r : records) *out << r << '\n';
  return {total, ok.load()};
}

}  // namespace bcube
