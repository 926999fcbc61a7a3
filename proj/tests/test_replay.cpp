/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include <doctest.h>

#include "pdta/benchgen.hpp"
#include "pdta/replay.hpp"

using namespace pdta;

TEST_CASE("replay over the fixed chain benchmark") {
  PdtaModel m = make_benchmark("B1", {});
  // t0..t7 push, t8 pops into the final state, t9 loops popping the rest.
  ReplayTrace full = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  for (int i = 0; i < 7; ++i) full.push_back(9);
  CHECK(replay_trace(m, full));  // 8 pushes, 8 pops

  SUBCASE("a ninth pop runs against an empty stack") {
    full.push_back(9);
    CHECK_FALSE(replay_trace(m, full));
  }
  SUBCASE("prefixes are feasible") {
    CHECK(replay_trace(m, {0, 1, 2}));
    CHECK(replay_trace(m, {0, 1, 2, 3, 4, 5, 6, 7, 8}));
  }
}

TEST_CASE("empty trace is the initial configuration") {
  CHECK(replay_trace(make_benchmark("B1", {}), {}));
  CHECK(replay_trace(make_benchmark("FIG3", {}), {}));
}

TEST_CASE("pop-first trace violates stack discipline") {
  PdtaModel m = make_benchmark("FIG3", {});
  CHECK_FALSE(replay_trace(m, {2}));  // pop at the start
}

TEST_CASE("stack discipline: one push cannot serve two pops") {
  PdtaModel m = make_benchmark("FIG3", {});
  CHECK(replay_trace(m, {0, 1, 2}));            // loop once, pop once
  CHECK_FALSE(replay_trace(m, {0, 1, 2, 3}));   // second pop has no match
}

TEST_CASE("timing infeasibility is detected by the exact zones") {
  PdtaModel m = make_benchmark("FIG3", {});
  // the loop needs one unit per iteration but the push guard y <= 1 bounds
  // total time, so a second loop iteration is infeasible
  CHECK(replay_trace(m, {0, 1}));
  CHECK_FALSE(replay_trace(m, {0, 1, 0, 1}));
}

TEST_CASE("non-chaining traces and bad indices are usage errors") {
  PdtaModel m = make_benchmark("FIG3", {});
  CHECK_THROWS_AS((void)replay_trace(m, {1}), std::invalid_argument);
  CHECK_THROWS_AS((void)replay_trace(m, {99}), std::invalid_argument);
}

TEST_CASE("trace parsing") {
  const ReplayTrace t = parse_trace("0\n1\n # comment\n\n 2 \n");
  CHECK(t == ReplayTrace{0, 1, 2});
  CHECK(parse_trace("").empty());
  CHECK_THROWS_AS(parse_trace("0\nxyz\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_trace("1 2\n"), std::invalid_argument);
}
