#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcube/dpc.hpp"
#include "bcube/hampath.hpp"
#include "bcube/io.hpp"
#include "bcube/oracle.hpp"
#include "bcube/pef.hpp"
#include "bcube/sweep.hpp"
#include "bcube/topology.hpp"

using namespace bcube;
using io::json;

namespace {

// Exit codes: 0 verified, 1 construction or verification failure, 2 bad input.
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct GraphArgs {
  std::optional<int> n;
  std::optional<int> k;
  std::string faults;
};

void add_graph_options(CLI::App* cmd, GraphArgs& g) {
  cmd->add_option("--n", g.n, "radix");
  cmd->add_option("--k", g.k, "level");
  cmd->add_option("--faults", g.faults, "fault file {n, k, edges}")->check(CLI::ExistingFile);
}

// Fault set from --faults, or an empty one on BC(--n, --k).
FaultSet load_faults(const GraphArgs& g) {
  if (!g.faults.empty()) {
    FaultSet f = io::faults_from_json(io::read_json_file(g.faults));
    if ((g.n && *g.n != f.dims().n) || (g.k && *g.k != f.dims().k))
      throw io::FormatError("--n/--k disagree with the fault file");
    return f;
  }
  if (!g.n || !g.k) throw io::FormatError("give --faults or both --n and --k");
  if (*g.n < 2 || *g.k < 0) throw io::FormatError("need n >= 2 and k >= 0");
  return FaultSet(Dims{*g.n, *g.k});
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    io::write_json_file(out_path, doc);
  }
}

std::vector<NodeId> all_nodes(const BCube& bc) {
  std::vector<NodeId> all(bc.node_count());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = NodeId{i};
  return all;
}

Dims parse_dims(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--dims", "expected n,k");
  return Dims{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired 2-disjoint path covers and Hamiltonian paths in faulty BCube networks"};
  app.require_subcommand(1);

  // topology
  int topo_n = 0, topo_k = 0;
  std::string topo_format = "json-summary";
  auto* topo = app.add_subcommand("topology", "export BC(n,k) or print its size");
  topo->add_option("--n", topo_n, "radix")->required();
  topo->add_option("--k", topo_k, "level")->required();
  topo->add_option("--format", topo_format)->check(CLI::IsMember({"dot", "json-summary"}));

  // gen-faults
  int gen_n = 0, gen_k = 0;
  double gen_fill = 1.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-faults", "random f-PEF fault set");
  gen->add_option("--n", gen_n, "radix")->required();
  gen->add_option("--k", gen_k, "level")->required();
  gen->add_option("--fill", gen_fill, "fraction of each budget to use")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--out", gen_out, "fault file to write (stdout if omitted)");

  // hampath
  GraphArgs ham_g;
  std::string ham_s, ham_t, ham_out;
  auto* ham = app.add_subcommand("hampath", "Hamiltonian path between two nodes");
  add_graph_options(ham, ham_g);
  ham->add_option("--s", ham_s, "source node string")->required();
  ham->add_option("--t", ham_t, "target node string")->required();
  ham->add_option("-o,--out", ham_out);

  // dpc
  GraphArgs dpc_g;
  std::string q_s1, q_t1, q_s2, q_t2, dpc_out;
  auto* dpc = app.add_subcommand("dpc", "paired 2-disjoint path cover");
  add_graph_options(dpc, dpc_g);
  dpc->add_option("--s1", q_s1)->required();
  dpc->add_option("--t1", q_t1)->required();
  dpc->add_option("--s2", q_s2)->required();
  dpc->add_option("--t2", q_t2)->required();
  dpc->add_option("-o,--out", dpc_out);

  // verify
  GraphArgs ver_g;
  std::string ver_dpc, ver_path;
  auto* ver = app.add_subcommand("verify", "check a dpc or hampath document");
  add_graph_options(ver, ver_g);
  auto* ver_dpc_opt = ver->add_option("--dpc", ver_dpc, "document from the dpc subcommand")->check(CLI::ExistingFile);
  auto* ver_path_opt = ver->add_option("--path", ver_path, "document from the hampath subcommand")->check(CLI::ExistingFile);
  ver_dpc_opt->excludes(ver_path_opt);

  // oracle
  GraphArgs orc_g;
  std::optional<int> orc_complete;
  int orc_cap = -1;
  std::string o_s1, o_t1, o_s2, o_t2, o_s, o_t;
  auto* orc = app.add_subcommand("oracle", "exhaustive search on a small instance");
  add_graph_options(orc, orc_g);
  orc->add_option("--complete", orc_complete, "search K_n instead of BC(n,k); fault file must be on BC(n,0)");
  orc->add_option("--cap", orc_cap, "largest graph to search (default 20 for dpc, 24 for paths)");
  orc->add_option("--s1", o_s1);
  orc->add_option("--t1", o_t1);
  orc->add_option("--s2", o_s2);
  orc->add_option("--t2", o_t2);
  orc->add_option("--s", o_s);
  orc->add_option("--t", o_t);

  // sweep
  std::vector<std::string> sw_dims;
  SweepConfig sw;
  std::string sw_mode = "dpc", sw_out;
  bool sw_no_timing = false;
  auto* swp = app.add_subcommand("sweep", "randomized or exhaustive verification matrix");
  swp->add_option("--dims", sw_dims, "n,k pairs")->required();
  swp->add_option("--fill", sw.fills, "fill levels");
  swp->add_option("--instances", sw.instances, "fault sets per (dims, fill)");
  swp->add_option("--quads", sw.quads, "endpoint sets per fault set");
  swp->add_flag("--all-quads", sw.all_quads, "every ordered endpoint tuple");
  swp->add_option("--seed", sw.seed, "seed of instance 0");
  swp->add_option("--mode", sw_mode)->check(CLI::IsMember({"dpc", "hampath"}));
  swp->add_option("--jobs", sw.jobs, "worker threads");
  swp->add_flag("--no-timing", sw_no_timing, "omit elapsed_ms");
  swp->add_option("-o,--out", sw_out, "record file (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*topo) {
      if (topo_n < 2 || topo_k < 0) throw io::FormatError("need n >= 2 and k >= 0");
      BCube bc(Dims{topo_n, topo_k});
      if (topo_format == "dot") {
        std::cout << to_dot(bc);
      } else {
        std::cout << io::topology_summary(bc).dump() << '\n';
      }
      return 0;
    }

    if (*gen) {
      if (gen_n < 4 || gen_k < 0) throw io::FormatError("fault budgets need n >= 4 and k >= 0");
      const FaultSet f = gen_random_pef(Dims{gen_n, gen_k}, gen_fill, gen_seed);
      if (gen_out.empty()) {
        std::cout << io::faults_to_json(f).dump(2) << '\n';
        std::cerr << io::fault_profile(f).dump() << '\n';
      } else {
        io::write_json_file(gen_out, io::faults_to_json(f));
        std::cout << io::fault_profile(f).dump() << '\n';
      }
      return 0;
    }

    if (*ham) {
      const FaultSet f = load_faults(ham_g);
      const BCube bc(f.dims());
      const NodeId s = bc.parse(ham_s), t = bc.parse(ham_t);
      json doc = {{"n", bc.radix()}, {"k", bc.level()}, {"s", ham_s}, {"t", ham_t}};
      try {
        const Path p = ham_path_bcube(bc, f, s, t);
        const auto nodes = all_nodes(bc);
        const auto report = oracle::verify_path(f.dims(), p, f, nodes, s, t);
        doc["path"] = io::path_to_json(bc, p);
        doc["report"] = io::report_to_json(report);
        doc["verified"] = report.ok();
        emit(doc, ham_out);
        return report.ok() ? 0 : kFailed;
      } catch (const ConstructionError& e) {
        doc["error"] = e.what();
        doc["verified"] = false;
        emit(doc, ham_out);
        return kFailed;
      }
    }

    if (*dpc) {
      const FaultSet f = load_faults(dpc_g);
      const BCube bc(f.dims());
      const EndpointQuad q{bc.parse(q_s1), bc.parse(q_t1), bc.parse(q_s2), bc.parse(q_t2)};
      validate_quad(bc, q);
      CaseTrace trace;
      try {
        const Dpc d = dpc_bcube(bc, f, q, &trace);
        const auto report = oracle::verify_2dpc(d, f, f.dims(), q);
        json doc = io::dpc_document(bc, q, d, trace, report.ok());
        if (!report.ok()) doc["report"] = io::report_to_json(report);
        emit(doc, dpc_out);
        return report.ok() ? 0 : kFailed;
      } catch (const ConstructionError& e) {
        emit({{"n", bc.radix()}, {"k", bc.level()}, {"quad", io::quad_to_json(bc, q)},
              {"case_trace", io::trace_to_json(trace)}, {"error", e.what()}, {"verified", false}},
             dpc_out);
        return kFailed;
      }
    }

    if (*ver) {
      if (ver_dpc.empty() && ver_path.empty()) throw io::FormatError("give --dpc or --path");
      const json doc = io::read_json_file(ver_dpc.empty() ? ver_path : ver_dpc);
      GraphArgs g = ver_g;
      if (g.faults.empty()) {
        if (!g.n && doc.contains("n")) g.n = doc.at("n").get<int>();
        if (!g.k && doc.contains("k")) g.k = doc.at("k").get<int>();
      }
      const FaultSet f = load_faults(g);
      const BCube bc(f.dims());
      oracle::VerifyReport report;
      if (!ver_dpc.empty()) {
        if (!doc.contains("p1") || !doc.contains("p2")) throw io::FormatError("dpc document needs p1 and p2");
        const EndpointQuad q = io::quad_from_json(bc, doc.at("quad"));
        const Dpc d{io::path_from_json(bc, doc.at("p1")), io::path_from_json(bc, doc.at("p2"))};
        report = oracle::verify_2dpc(d, f, f.dims(), q);
      } else {
        if (!doc.contains("path")) throw io::FormatError("path document needs 'path'");
        const Path p = io::path_from_json(bc, doc.at("path"));
        const NodeId s = bc.parse(doc.at("s").get<std::string>()), t = bc.parse(doc.at("t").get<std::string>());
        report = oracle::verify_path(f.dims(), p, f, all_nodes(bc), s, t);
      }
      std::cout << io::report_to_json(report).dump(2) << '\n';
      return report.ok() ? 0 : kFailed;
    }

    if (*orc) {
      const bool pair_mode = !o_s.empty() || !o_t.empty();
      const bool quad_mode = !o_s1.empty() || !o_t1.empty() || !o_s2.empty() || !o_t2.empty();
      if (pair_mode == quad_mode) throw io::FormatError("give either --s/--t or --s1/--t1/--s2/--t2");
      GraphArgs g = orc_g;
      if (orc_complete) {
        g.n = *orc_complete;
        g.k = 0;
      }
      const FaultSet f = load_faults(g);
      const BCube bc(f.dims());
      const oracle::SmallGraph base = orc_complete ? oracle::SmallGraph::complete(bc.radix())
                                                   : oracle::SmallGraph::bcube(f.dims());
      const oracle::SmallGraph graph = base.without(f);
      json doc = {{"n", bc.radix()}, {"k", bc.level()}, {"complete", orc_complete.has_value()}};
      if (pair_mode) {
        const NodeId s = bc.parse(o_s), t = bc.parse(o_t);
        const auto p = oracle::brute_ham(graph, s, t, orc_cap < 0 ? oracle::kDefaultHamCap : orc_cap);
        doc["found"] = p.has_value();
        if (p) doc["path"] = io::path_to_json(bc, *p);
        std::cout << doc.dump(2) << '\n';
        return p ? 0 : kFailed;
      }
      const EndpointQuad q{bc.parse(o_s1), bc.parse(o_t1), bc.parse(o_s2), bc.parse(o_t2)};
      const auto d = oracle::brute_2dpc(graph, q, orc_cap < 0 ? oracle::kDefaultDpcCap : orc_cap);
      doc["found"] = d.has_value();
      if (d) {
        doc["p1"] = io::path_to_json(bc, d->p1);
        doc["p2"] = io::path_to_json(bc, d->p2);
      }
      std::cout << doc.dump(2) << '\n';
      return d ? 0 : kFailed;
    }

    if (*swp) {
      for (const std::string& d : sw_dims) sw.dims.push_back(parse_dims(d));
      sw.mode = sw_mode == "dpc" ? SweepMode::Dpc : SweepMode::HamPath;
      sw.timing = !sw_no_timing;
      SweepSummary summary;
      if (sw_out.empty()) {
        summary = run_sweep(sw, &std::cout);
      } else {
        std::ofstream out(sw_out);
        if (!out) throw io::FormatError("cannot write " + sw_out);
        summary = run_sweep(sw, &out);
      }
      std::cerr << summary.verified << "/" << summary.trials << " verified\n";
      return summary.failed() == 0 ? 0 : kFailed;
    }
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return 0;
}
