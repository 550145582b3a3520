#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bcube/dpc.hpp"
#include "bcube/hampath.hpp"
#include "bcube/oracle.hpp"
#include "bcube/pef.hpp"
#include "bcube/topology.hpp"

namespace bcube::io {

using nlohmann::json;

/// Thrown for malformed documents (missing fields, bad node strings, ...).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {n, k, edges: [[u, v], ...]} with node strings in BCube::format.
json faults_to_json(const FaultSet& faults);
FaultSet faults_from_json(const json& doc);

/// Per-dimension counts, budgets and the f-PEF verdict.
json fault_profile(const FaultSet& faults);

json path_to_json(const BCube& bc, const Path& path);
Path path_from_json(const BCube& bc, const json& nodes);

json quad_to_json(const BCube& bc, const EndpointQuad& q);
EndpointQuad quad_from_json(const BCube& bc, const json& doc);

json trace_to_json(const CaseTrace& trace);
json report_to_json(const oracle::VerifyReport& report);

/// {n, k, quad, p1, p2, case_trace, verified}
json dpc_document(const BCube& bc, const EndpointQuad& q, const Dpc& dpc, const CaseTrace& trace, bool verified);

json topology_summary(const BCube& bc);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

}  // namespace bcube::io
