#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "bcube/io.hpp"

using namespace bcube;
using io::json;

TEST_CASE("fault files round-trip") {
  const FaultSet f = gen_random_pef({10, 1}, 1.0, 42);
  const json doc = io::faults_to_json(f);
  CHECK(doc["n"] == 10);
  CHECK(doc["edges"].size() == 31);
  const FaultSet g = io::faults_from_json(doc);
  CHECK(g.edges() == f.edges());

  const json profile = io::fault_profile(f);
  CHECK(profile["f_pef"] == true);
  CHECK(profile["total"] == 31);
  CHECK(profile["per_dim"] == json::array({6, 25}));
}

TEST_CASE("fault files are validated") {
  CHECK_THROWS_AS(io::faults_from_json(json{{"n", 4}}), io::FormatError);
  CHECK_THROWS_AS(io::faults_from_json(json{{"n", 4}, {"k", 1}, {"edges", json::array({json::array({"00", "11"})})}}), io::FormatError);
  CHECK_THROWS_AS(io::faults_from_json(json{{"n", 4}, {"k", 1}, {"edges", json::array({json::array({"00", "4"})})}}), io::FormatError);
  CHECK_THROWS_AS(io::faults_from_json(json{{"n", 4}, {"k", 1}, {"edges", json::array({json::array({"00"})})}}), io::FormatError);
  CHECK_THROWS_AS(io::faults_from_json(json{{"n", "4"}, {"k", 1}, {"edges", json::array()}}), io::FormatError);
  const FaultSet ok = io::faults_from_json(json{{"n", 4}, {"k", 1}, {"edges", json::array({json::array({"01", "00"})})}});
  CHECK(ok.size() == 1);
}

TEST_CASE("dpc documents re-verify") {
  const BCube bc({5, 2});
  const FaultSet f = gen_random_pef({5, 2}, 1.0, 3);
  const EndpointQuad q{bc.parse("000"), bc.parse("123"), bc.parse("444"), bc.parse("014")};
  CaseTrace trace;
  const Dpc d = dpc_bcube(bc, f, q, &trace);
  const bool verdict = oracle::verify_2dpc(d, f, bc.dims(), q).ok();
  const json doc = io::dpc_document(bc, q, d, trace, verdict);

  const auto tmp = std::filesystem::temp_directory_path() / "bcube_io_test.json";
  io::write_json_file(tmp.string(), doc);
  const json back = io::read_json_file(tmp.string());
  std::filesystem::remove(tmp);

  const Dpc d2{io::path_from_json(bc, back["p1"]), io::path_from_json(bc, back["p2"])};
  CHECK(d2.p1 == d.p1);
  CHECK(d2.p2 == d.p2);
  CHECK(io::quad_from_json(bc, back["quad"]) == q);
  CHECK(oracle::verify_2dpc(d2, f, bc.dims(), q).ok() == verdict);
  CHECK(back["verified"] == verdict);
  CHECK(back["case_trace"].size() == trace.size());
  CHECK(back["case_trace"][0].contains("transform"));
}

TEST_CASE("topology summary") {
  const json s = io::topology_summary(BCube({3, 1}));
  CHECK(s["nodes"] == 9);
  CHECK(s["edges"] == 18);
  CHECK(s["per_dim"] == json::array({9, 9}));
  CHECK(io::topology_summary(BCube({4, 2}))["edges"] == 288);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/bcube.json"), io::FormatError);
}
