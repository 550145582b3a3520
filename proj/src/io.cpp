#include "bcube/io.hpp"

#include <fstream>

namespace bcube::io {

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

int int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

NodeId parse_node(const BCube& bc, const json& v) {
  if (!v.is_string()) throw FormatError("node must be a string");
  try {
    return bc.parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

json faults_to_json(const FaultSet& faults) {
  BCube bc(faults.dims());
  json edges = json::array();
  for (const Edge& e : faults.edges()) edges.push_back({bc.format(e.u), bc.format(e.v)});
  return {{"n", faults.dims().n}, {"k", faults.dims().k}, {"edges", edges}};
}

FaultSet faults_from_json(const json& doc) {
  const Dims dims{int_field(doc, "n"), int_field(doc, "k")};
  if (dims.n < 2 || dims.k < 0) throw FormatError("need n >= 2 and k >= 0");
  BCube bc(dims);
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) throw FormatError("'edges' must be a list");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair of node strings");
    pairs.emplace_back(parse_node(bc, e[0]), parse_node(bc, e[1]));
  }
  try {
    return FaultSet(bc, pairs);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json fault_profile(const FaultSet& faults) {
  json out = {{"n", faults.dims().n}, {"k", faults.dims().k}, {"total", faults.size()}};
  out["per_dim"] = faults.per_dim_counts();
  if (faults.dims().n >= 4) {
    out["budgets"] = budgets(faults.dims());
    out["f_pef"] = is_f_pef(faults);
  }
  return out;
}

json path_to_json(const BCube& bc, const Path& path) {
  json out = json::array();
  for (NodeId u : path) out.push_back(bc.format(u));
  return out;
}

Path path_from_json(const BCube& bc, const json& nodes) {
  if (!nodes.is_array()) throw FormatError("path must be a list of node strings");
  Path p;
  for (const json& v : nodes) p.push_back(parse_node(bc, v));
  return p;
}

json quad_to_json(const BCube& bc, const EndpointQuad& q) {
  return {{"s1", bc.format(q.s1)}, {"t1", bc.format(q.t1)}, {"s2", bc.format(q.s2)}, {"t2", bc.format(q.t2)}};
}

EndpointQuad quad_from_json(const BCube& bc, const json& doc) {
  return {parse_node(bc, field(doc, "s1")), parse_node(bc, field(doc, "t1")), parse_node(bc, field(doc, "s2")),
          parse_node(bc, field(doc, "t2"))};
}

json trace_to_json(const CaseTrace& trace) {
  json out = json::array();
  for (const TraceEntry& t : trace) {
    out.push_back({{"level", t.level},
                   {"split_dim", t.split_dim},
                   {"case", to_string(t.kind)},
                   {"branch", t.branch},
                   {"transform",
                    {{"swap", t.transform.swap_pairs},
                     {"reverse_first", t.transform.reverse_first},
                     {"reverse_second", t.transform.reverse_second}}}});
  }
  return out;
}

json report_to_json(const oracle::VerifyReport& report) {
  json v = json::array();
  for (const auto& x : report.violations) v.push_back({{"kind", oracle::to_string(x.kind)}, {"where", x.location}});
  return {{"ok", report.ok()}, {"violations", v}};
}

json dpc_document(const BCube& bc, const EndpointQuad& q, const Dpc& dpc, const CaseTrace& trace, bool verified) {
  return {{"n", bc.radix()},
          {"k", bc.level()},
          {"quad", quad_to_json(bc, q)},
          {"p1", path_to_json(bc, dpc.p1)},
          {"p2", path_to_json(bc, dpc.p2)},
          {"case_trace", trace_to_json(trace)},
          {"verified", verified}};
}

json topology_summary(const BCube& bc) {
  std::vector<std::uint64_t> per_dim(bc.dimensions(), bc.node_count() * (bc.radix() - 1) / 2);
  return {{"n", bc.radix()},
          {"k", bc.level()},
          {"nodes", bc.node_count()},
          {"edges", bc.edge_count()},
          {"per_dim", per_dim}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace bcube::io
