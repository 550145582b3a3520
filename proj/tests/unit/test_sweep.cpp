#include <doctest.h>

#include <sstream>

#include "bcube/sweep.hpp"

using namespace bcube;

TEST_CASE("sweeps are reproducible across worker counts") {
  SweepConfig c;
  c.dims = {{5, 1}, {4, 2}};
  c.instances = 2;
  c.quads = 10;
  c.seed = 77;
  c.timing = false;
  std::ostringstream a, b;
  const SweepSummary one = run_sweep(c, &a);
  c.jobs = 4;
  const SweepSummary four = run_sweep(c, &b);
  CHECK(one.trials == 40);
  CHECK(one.failed() == 0);
  CHECK(four.verified == one.verified);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\"trial\":39") != std::string::npos);
  CHECK(a.str().find("elapsed_ms") == std::string::npos);
}

TEST_CASE("exhaustive endpoint sweeps") {
  SweepConfig c;
  c.dims = {{4, 1}};
  c.all_quads = true;
  c.mode = SweepMode::HamPath;
  c.timing = false;
  const SweepSummary s = run_sweep(c, nullptr);
  CHECK(s.trials == 16 * 15);
  CHECK(s.failed() == 0);
}

TEST_CASE("bad sweep configurations") {
  SweepConfig c;
  CHECK_THROWS_AS(run_sweep(c, nullptr), std::invalid_argument);
  c.dims = {{3, 1}};
  CHECK_THROWS_AS(run_sweep(c, nullptr), std::invalid_argument);
  c.dims = {{5, 2}};
  c.all_quads = true;
  CHECK_THROWS_AS(run_sweep(c, nullptr), std::invalid_argument);
}
