/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include <doctest.h>

#include <set>

#include "pdta/benchgen.hpp"
#include "pdta/reach.hpp"
#include "pdta/region.hpp"
#include "pdta/region_domain.hpp"

using namespace pdta;

namespace {

std::vector<Region> delay_chain(const RegionContext& ctx, Region r) {
  std::vector<Region> chain{r};
  for (;;) {
    Region next = ctx.delay_successor(chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

}  // namespace

TEST_CASE("one clock with bound 1: the classical four-region chain") {
  RegionContext ctx({1});
  const auto chain = delay_chain(ctx, ctx.initial());
  REQUIRE(chain.size() == 4);
  // {x=0}, {0<x<1}, {x=1}, {x>1}
  CHECK(chain[0].ip[0] == 0);
  CHECK(chain[0].fc[0] == 0);
  CHECK(chain[1].ip[0] == 0);
  CHECK(chain[1].fc[0] == 1);
  CHECK(chain[2].ip[0] == 1);
  CHECK(chain[2].fc[0] == 0);
  CHECK(ctx.is_above(chain[3], 0));
  // the terminal region is a delay fixpoint
  CHECK(ctx.delay_successor(chain[3]) == chain[3]);
}

TEST_CASE("guard filtering and reset over the chain") {
  RegionContext ctx({1});
  ModelBuilder b("probe");
  const ClockId x = b.add_clock("x");
  const StateId s = b.add_state("s", true);
  b.add_transition(s, s, Guard{{{x, {}, CmpOp::Ge, 1}}}, StackOp::nop(), {});
  b.add_transition(s, s, {}, StackOp::nop(), {x});
  PdtaModel m = b.finalize();

  SUBCASE("x >= 1 keeps {x=1} and {x>1}") {
    const auto succs = ctx.successors(ctx.initial(), m.transitions[0]);
    REQUIRE(succs.size() == 2);
    CHECK(succs[0].ip[0] == 1);
    CHECK(succs[0].fc[0] == 0);
    CHECK(ctx.is_above(succs[1], 0));
  }
  SUBCASE("resetting the only clock collapses everything to {x=0}") {
    const auto succs = ctx.successors(ctx.initial(), m.transitions[1]);
    REQUIRE(succs.size() == 1);
    CHECK(succs[0] == ctx.initial());
  }
}

TEST_CASE("two clocks: fractional order is tracked through the chain") {
  RegionContext ctx({1, 2});
  const auto chain = delay_chain(ctx, ctx.initial());
  // (0,0) -> (0+,0+) -> (1,1) -> (>1,1+) -> (>1,2) -> (>1,>2)
  REQUIRE(chain.size() == 6);
  CHECK(chain[1].fc[0] == chain[1].fc[1]);  // fractions advance together
  CHECK(chain[2].ip[0] == 1);
  CHECK(chain[2].ip[1] == 1);
  CHECK(ctx.is_above(chain[3], 0));
  CHECK_FALSE(ctx.is_above(chain[3], 1));
  CHECK(chain[4].ip[1] == 2);
  CHECK(ctx.is_above(chain[5], 1));
}

TEST_CASE("region reachability matches the known verdicts") {
  CHECK_FALSE(region_reach(make_benchmark("FIG3", {})).nonempty);
  CHECK(region_reach(make_benchmark("B3", {3, 4})).nonempty);
  CHECK_FALSE(region_reach(make_benchmark("B3", {4, 3})).nonempty);
  CHECK(region_reach(make_benchmark("B8", {})).nonempty);
}

TEST_CASE("region count stays within the classical bound") {
  for (const char* name : {"FIG3", "B1", "B8"}) {
    PdtaModel m = make_benchmark(name, {});
    EngineConfig cfg;
    cfg.mode = SearchMode::Region;
    ReachEngine<RegionDomain> engine(m, cfg, RegionDomain(m));
    engine.run();
    CHECK(engine.domain().size() <=
          engine.domain().context().classical_region_bound());
  }
}

TEST_CASE("region mode verdict agrees with the zone modes on small models") {
  for (const char* name : {"FIG3", "B1", "B4", "B8", "B10"}) {
    PdtaModel m = make_benchmark(name, {});
    EngineConfig sim;
    EngineConfig region;
    region.mode = SearchMode::Region;
    const ReachResult a = pdta_reach(m, sim);
    const ReachResult b = pdta_reach(m, region);
    CHECK(a.nonempty == b.nonempty);
    CHECK(a.reachable == b.reachable);
  }
}
