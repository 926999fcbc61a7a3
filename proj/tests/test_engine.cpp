/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "pdta/benchgen.hpp"
#include "pdta/reach.hpp"
#include "pdta/zone_domain.hpp"
#include "support/builders.hpp"

using namespace pdta;

namespace {

std::set<StateId> reach_set(const ReachResult& r) {
  return {r.reachable.begin(), r.reachable.end()};
}

// Reference zone-graph exploration for plain timed automata (nop edges
// only): worklist with inclusion pruning, independent of the engine.
std::set<StateId> ta_reference_reach(const PdtaModel& m) {
  std::vector<std::pair<StateId, Zone>> visited;
  std::deque<std::pair<StateId, Zone>> todo;
  visited.emplace_back(m.initial, Zone::initial(m.clock_count()));
  todo.push_back(visited.back());
  while (!todo.empty()) {
    auto [q, z] = todo.front();
    todo.pop_front();
    for (std::uint32_t ti : m.outgoing[q]) {
      const Transition& t = m.transitions[ti];
      REQUIRE(t.op.kind == StackOpKind::Nop);
      Zone s = successor(z, t.guard, t.resets);
      if (s.is_empty()) continue;
      bool subsumed = false;
      for (const auto& [q2, z2] : visited)
        if (q2 == t.tgt && z2.includes(s)) {
          subsumed = true;
          break;
        }
      if (subsumed) continue;
      visited.emplace_back(t.tgt, std::move(s));
      todo.push_back(visited.back());
    }
  }
  std::set<StateId> out;
  for (const auto& [q, z] : visited) out.insert(q);
  return out;
}

PdtaModel nopified(const PdtaModel& m) {
  ModelBuilder b(m.name + "_ta");
  for (const std::string& c : m.clocks) b.add_clock(c);
  for (StateId q = 0; q < m.state_count(); ++q)
    b.add_state(m.states[q], q == m.initial, m.is_final(q));
  for (const Transition& t : m.transitions)
    b.add_transition(t.src, t.tgt, t.guard, StackOp::nop(), t.resets, t.label);
  return b.finalize();
}

}  // namespace

TEST_CASE("the minimal push-loop model separates naive pruning from the sound modes") {
  PdtaModel m = make_benchmark("FIG3", {});
  REQUIRE(m.states[3] == "q3");

  EngineConfig sim;
  const ReachResult rs = pdta_reach(m, sim);
  CHECK_FALSE(rs.nonempty);
  CHECK_FALSE(rs.unsound_mode);
  CHECK(reach_set(rs) == std::set<StateId>{0, 1, 2});
  CHECK(rs.stats.pairs_added == 5);
  CHECK(rs.stats.roots == 2);

  EngineConfig naive;
  naive.mode = SearchMode::Naive;
  const ReachResult rn = pdta_reach(m, naive);
  CHECK(rn.nonempty);  // q3 wrongly reported reachable
  CHECK(rn.unsound_mode);
  CHECK(reach_set(rn).count(3) == 1);

  // naive strictly over-approximates the sound result here
  const auto sound = reach_set(rs);
  const auto unsound = reach_set(rn);
  CHECK(std::includes(unsound.begin(), unsound.end(), sound.begin(), sound.end()));
  CHECK(unsound.size() > sound.size());

  EngineConfig equiv;
  equiv.mode = SearchMode::Equivalence;
  CHECK(reach_set(pdta_reach(m, equiv)) == sound);
  EngineConfig region;
  region.mode = SearchMode::Region;
  CHECK(reach_set(pdta_reach(m, region)) == sound);
}

TEST_CASE("store shape after the fixed chain benchmark") {
  PdtaModel m = make_benchmark("B1", {});
  EngineConfig cfg;
  ReachEngine<ZoneDomain> engine(m, cfg, ZoneDomain(m));
  const ReachResult r = engine.run();
  CHECK(r.nonempty);
  CHECK(r.stats.pairs_added == 17);
  CHECK(r.stats.roots == 9);

  const Tlm& tlm = engine.tlm();
  // Start rule: the initial self pair is present in the start root.
  CHECK(tlm.contains(0, m.initial, tlm.roots[0].payload));
  // Every root carries its own self pair (Start/Push rules).
  for (RootId rid = 0; rid < tlm.roots.size(); ++rid)
    CHECK(tlm.contains(rid, tlm.roots[rid].state, tlm.roots[rid].payload));
  // Each chain root recorded exactly one push into its successor root, and
  // repeated processing never duplicated the entry.
  std::size_t push_entries = 0;
  for (const auto& root : tlm.roots)
    for (const auto& bucket : root.pushes) {
      push_entries += bucket.order.size();
      CHECK(bucket.order.size() == bucket.members.size());
    }
  CHECK(push_entries == 8);
}

TEST_CASE("pop buckets segregate by symbol") {
  // One root, two symbols: pops under different symbols must not mix.
  ModelBuilder b("two_symbols");
  const StateId s = b.add_state("s", true);
  const StateId t1 = b.add_state("t1");
  const StateId t2 = b.add_state("t2", false, true);
  const SymbolId a = b.add_symbol("a");
  const SymbolId bb = b.add_symbol("b");
  b.add_transition(s, t1, {}, StackOp::pop(a), {});
  b.add_transition(s, t2, {}, StackOp::pop(bb), {});
  PdtaModel m = b.finalize();

  EngineConfig cfg;
  ReachEngine<ZoneDomain> engine(m, cfg, ZoneDomain(m));
  const ReachResult r = engine.run();
  CHECK_FALSE(r.nonempty);  // no pushes, so no pop ever matches
  const Tlm::Root& root = engine.tlm().roots[0];
  REQUIRE(root.pops.size() == 2);
  CHECK(root.pops[a].order.size() == 1);
  CHECK(root.pops[a].order[0].state == t1);
  CHECK(root.pops[bb].order.size() == 1);
  CHECK(root.pops[bb].order[0].state == t2);
}

TEST_CASE("nop-only models degenerate to the timed-automaton exploration") {
  for (const char* name : {"FIG3", "B4", "B10"}) {
    PdtaModel ta = nopified(make_benchmark(name, {}));
    const ReachResult r = pdta_reach(ta, {});
    CHECK(reach_set(r) == ta_reference_reach(ta));
    // no stack activity at all
    CHECK(r.stats.roots == 1);
  }
  // the nop-ified separator model reaches everything as a TA
  PdtaModel ta = nopified(make_benchmark("FIG3", {}));
  CHECK(reach_set(pdta_reach(ta, {})) == std::set<StateId>{0, 1, 2, 3});
}

TEST_CASE("verdicts are stable across worklist orders") {
  for (const char* name : {"FIG3", "B3", "B5", "B8"}) {
    std::vector<std::int64_t> params;
    if (std::string(name) == "B3") params = {3, 4};
    if (std::string(name) == "B5") params = {4, 2};
    PdtaModel m = make_benchmark(name, params);
    EngineConfig lifo, fifo;
    fifo.order = TodoOrder::Fifo;
    const ReachResult a = pdta_reach(m, lifo);
    const ReachResult b = pdta_reach(m, fifo);
    CHECK(reach_set(a) == reach_set(b));
    CHECK(a.nonempty == b.nonempty);
  }
}

TEST_CASE("stop_early halts once a final state enters the start root") {
  PdtaModel m = make_benchmark("B1", {});
  EngineConfig cfg;
  cfg.stop_early = true;
  const ReachResult r = pdta_reach(m, cfg);
  CHECK(r.nonempty);
  CHECK(r.stats.pairs_added <= 17);
}

TEST_CASE("timeout reports partial exploration") {
  PdtaModel m = make_benchmark("B2", {300});
  EngineConfig cfg;
  cfg.timeout_ms = 1;
  const ReachResult r = pdta_reach(m, cfg);
  CHECK(r.timed_out);
  CHECK(r.stats.pairs_added > 0);
  CHECK(r.stats.pairs_added < 45000);  // full run would reach (k+1)(k+4)/2
}

TEST_CASE("fixed-point verification") {
  PdtaModel m = make_benchmark("B1", {});
  for (SearchMode mode : {SearchMode::Simulation, SearchMode::Equivalence}) {
    EngineConfig cfg;
    cfg.mode = mode;
    ReachEngine<ZoneDomain> engine(m, cfg, ZoneDomain(m));
    engine.run();
    CHECK(engine.verify_fixed_point());

    // Deleting any non-self pair breaks the fixed point.
    Tlm& tlm = engine.mutable_tlm();
    bool removed = false;
    for (auto& root : tlm.roots) {
      for (auto& [q, bucket] : root.nodes_by_state) {
        if (q == root.state || bucket.empty()) continue;
        root.node_set.erase(node_key(q, bucket.back()));
        bucket.pop_back();
        removed = true;
        break;
      }
      if (removed) break;
    }
    REQUIRE(removed);
    CHECK_FALSE(engine.verify_fixed_point());
  }
  // An emptied store violates the Start rule.
  EngineConfig cfg;
  ReachEngine<ZoneDomain> engine(m, cfg, ZoneDomain(m));
  engine.run();
  engine.mutable_tlm().roots.clear();
  CHECK_FALSE(engine.verify_fixed_point());
}

TEST_CASE("runtime invariant checks stay silent on sound runs") {
  for (const char* name : {"B1", "B3", "B8", "FIG3"}) {
    std::vector<std::int64_t> params;
    if (std::string(name) == "B3") params = {3, 4};
    PdtaModel m = make_benchmark(name, params);
    EngineConfig cfg;
    cfg.check_invariants = true;
    const ReachResult r = pdta_reach(m, cfg);
    CHECK(r.invariants_ok);
    CHECK(r.invariant_violations.empty());
  }
}

TEST_CASE("unvalidated models are rejected") {
  PdtaModel m = parse_model(
      "system:P\nclock:x\nclock:y\nstate:s:initial\n"
      "edge:P:s:s:l{provided: x-y<=2}\n");
  CHECK_THROWS_AS((void)pdta_reach(m, {}), std::invalid_argument);
}
