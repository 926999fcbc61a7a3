/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_ENGINE_HPP
#define PDTA_ENGINE_HPP

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pdta/flat_hash.hpp"
#include "pdta/model.hpp"

namespace pdta {

using PayloadId = std::uint32_t;
using RootId = std::uint32_t;

enum class SearchMode : std::uint8_t { Simulation, Equivalence, Naive, Region };
enum class TodoOrder : std::uint8_t { Lifo, Fifo };

struct EngineConfig {
  SearchMode mode = SearchMode::Simulation;
  TodoOrder order = TodoOrder::Lifo;
  bool stop_early = false;
  bool check_invariants = false;
  bool record_provenance = false;
  std::int64_t timeout_ms = 0;  // 0 = unbounded
};

struct EngineStats {
  std::uint64_t pairs_added = 0;  // successful store additions ("# nodes")
  std::uint64_t roots = 0;
  double elapsed_ms = 0.0;
};

struct ReachResult {
  std::vector<StateId> reachable;  // projection of the start root's node set
  bool nonempty = false;
  EngineStats stats;
  bool unsound_mode = false;  // set by the naive pruning mode
  bool timed_out = false;
  bool invariants_ok = true;
  std::vector<std::string> invariant_violations;
};

// ── Store ────────────────────────────────────────────────────────────────────
// The two-level map holding the pair set, the push set and the pop set.
// All payloads are interned ids owned by the node domain; every collection
// iterated during the search is an insertion-ordered vector, so runs are
// reproducible. The hash sets only answer exact-membership queries.

struct TodoEntry {
  RootId root;
  StateId state;
  PayloadId payload;
};

inline std::uint64_t node_key(StateId q, PayloadId p) {
  return (static_cast<std::uint64_t>(q) << 32) | p;
}

struct Tlm {
  // One pop record: the reached node plus the premise that produced it
  // (needed for provenance checks and fixed-point verification).
  struct PopEntry {
    StateId state;
    PayloadId payload;
    StateId src_state;
    PayloadId src_payload;
    std::uint32_t trans;
  };
  // One push record: the source root plus the node/transition that pushed.
  struct PushEntry {
    RootId source;
    StateId src_state;
    PayloadId src_payload;
    std::uint32_t trans;
  };
  struct PopBucket {
    std::vector<PopEntry> order;
    std::unordered_map<StateId, std::vector<PayloadId>> by_state;
    FlatSet64 members;
  };
  struct PushBucket {
    std::vector<PushEntry> order;
    std::unordered_set<RootId> members;
  };
  struct Root {
    StateId state;
    PayloadId payload;
    std::unordered_map<StateId, std::vector<PayloadId>> nodes_by_state;
    FlatSet64 node_set;
    std::vector<PopBucket> pops;    // indexed by stack symbol
    std::vector<PushBucket> pushes; // indexed by stack symbol; keyed on destination
  };

  std::vector<Root> roots;
  std::vector<std::vector<RootId>> roots_by_state;
  std::uint64_t pairs_added = 0;

  bool contains(RootId r, StateId q, PayloadId p) const {
    return roots[r].node_set.contains(node_key(q, p));
  }
};

// Where an added pair came from; drives witness-trace reconstruction.
struct Provenance {
  enum class Rule : std::uint8_t { Start, Internal, PushSelf, Pop } rule;
  // premise node (q',Z') within the same root (Internal, Pop)
  StateId src_state = 0;
  PayloadId src_payload = 0;
  std::uint32_t trans = 0;  // nop transition, or the matched push transition
  // inner well-nested segment for Pop: node in the pushed-into root
  RootId inner_root = 0;
  StateId inner_state = 0;
  PayloadId inner_payload = 0;
  std::uint32_t pop_trans = 0;
};

// ── ReachEngine ──────────────────────────────────────────────────────────────
// Worklist fixed-point computation over a pluggable node domain. The domain
// interns payloads and provides the successor and comparison operations:
//
//   PayloadId initial();
//   void successors(PayloadId, const Transition&, std::vector<PayloadId>&);
//   bool le(PayloadId, PayloadId);
//   bool equiv(PayloadId, PayloadId);
//   static constexpr bool kExactOrder;   // le coincides with equality
//
// A single run is strictly single-threaded; distinct engines are independent.

template <typename Domain>
class ReachEngine {
public:
  ReachEngine(const PdtaModel& model, EngineConfig cfg, Domain domain)
      : model_(&model), cfg_(cfg), domain_(std::move(domain)) {
    tlm_.roots_by_state.resize(model.state_count());
  }

  ReachResult run();

  const Tlm& tlm() const { return tlm_; }
  // Mutable access for tests and offline tooling; the engine itself never
  // removes entries.
  Tlm& mutable_tlm() { return tlm_; }
  Domain& domain() { return domain_; }
  const Domain& domain() const { return domain_; }

  // Re-applies every rule premise over the final sets; true iff every
  // conclusion is already satisfied up to the mode's subsumption test.
  // Non-const because recomputing successors may grow the domain's arena.
  bool verify_fixed_point();

  // Witness trace (transition decl indices) for a pair of the start root;
  // meaningful only when cfg.record_provenance was set.
  std::vector<std::uint32_t> witness_trace(StateId q, PayloadId p) const;

  const std::unordered_map<std::uint64_t, Provenance>* provenance(RootId r) const {
    return r < provenance_.size() ? &provenance_[r] : nullptr;
  }

private:
  // mode-directed comparisons -------------------------------------------------

  // isNewNode / isNewPop test: simulation prunes by le, equivalence by equiv.
  bool covers(PayloadId cand, PayloadId existing) const {
    if constexpr (Domain::kExactOrder) {
      return cand == existing;
    } else {
      return cfg_.mode == SearchMode::Equivalence ? domain_.equiv(cand, existing)
                                                  : domain_.le(cand, existing);
    }
  }

  // isNewRoot test: equivalence in all sound modes, le in the naive mode.
  bool root_match(PayloadId cand, PayloadId existing) const {
    if constexpr (Domain::kExactOrder) {
      return cand == existing;
    } else {
      return cfg_.mode == SearchMode::Naive ? domain_.le(cand, existing)
                                            : domain_.equiv(cand, existing);
    }
  }

  bool is_new_node(RootId r, StateId q, PayloadId p) const {
    const Tlm::Root& root = tlm_.roots[r];
    if (root.node_set.contains(node_key(q, p))) return false;
    if constexpr (!Domain::kExactOrder) {
      auto it = root.nodes_by_state.find(q);
      if (it != root.nodes_by_state.end())
        for (PayloadId existing : it->second)
          if (covers(p, existing)) return false;
    }
    return true;
  }

  std::pair<bool, RootId> find_root(StateId q, PayloadId p) const {
    if constexpr (Domain::kExactOrder) {
      const std::uint32_t r = root_index_.find(node_key(q, p));
      if (r != FlatMap64::kNotFound) return {false, r};
      return {true, 0};
    } else {
      for (RootId r : tlm_.roots_by_state[q])
        if (root_match(p, tlm_.roots[r].payload)) return {false, r};
      return {true, 0};
    }
  }

  bool is_new_pop(RootId r, SymbolId a, StateId q, PayloadId p) const {
    const Tlm::PopBucket& bucket = tlm_.roots[r].pops[a];
    if (bucket.members.contains(node_key(q, p))) return false;
    if constexpr (!Domain::kExactOrder) {
      auto it = bucket.by_state.find(q);
      if (it != bucket.by_state.end())
        for (PayloadId existing : it->second)
          if (covers(p, existing)) return false;
    }
    return true;
  }

  // store mutations -----------------------------------------------------------

  RootId create_root(StateId q, PayloadId p) {
    const RootId id = static_cast<RootId>(tlm_.roots.size());
    Tlm::Root root;
    root.state = q;
    root.payload = p;
    root.pops.resize(model_->symbol_count());
    root.pushes.resize(model_->symbol_count());
    tlm_.roots.push_back(std::move(root));
    tlm_.roots_by_state[q].push_back(id);
    if constexpr (Domain::kExactOrder) root_index_.insert(node_key(q, p), id);
    if (cfg_.record_provenance) provenance_.resize(tlm_.roots.size());
    return id;
  }

  void add_pair(RootId r, StateId q, PayloadId p, Provenance prov) {
    Tlm::Root& root = tlm_.roots[r];
    root.nodes_by_state[q].push_back(p);
    root.node_set.insert(node_key(q, p));
    ++tlm_.pairs_added;
    if (cfg_.record_provenance) provenance_[r].emplace(node_key(q, p), prov);
    if (r == 0 && cfg_.stop_early && model_->is_final(q)) stop_ = true;
  }

  void push_todo(RootId r, StateId q, PayloadId p) {
    if (cfg_.check_invariants && !tlm_.contains(r, q, p))
      violation("ToDo entry not present in the pair set at insertion");
    todo_.push_back({r, q, p});
  }

  void violation(const std::string& msg) {
    invariants_ok_ = false;
    if (violations_.size() < 16) violations_.push_back(msg);
  }

  // invariant shadow checks ---------------------------------------------------

  void check_extracted(const TodoEntry& e) {
    if (!tlm_.contains(e.root, e.state, e.payload))
      violation("extracted ToDo entry not present in the pair set");
    // Full worklist sweep, amortized against the sweep length so the checks
    // stay linear overall.
    if (++extracted_ >= next_sweep_) {
      for (std::size_t i = todo_head_; i < todo_.size(); ++i)
        if (!tlm_.contains(todo_[i].root, todo_[i].state, todo_[i].payload)) {
          violation("pending ToDo entry not present in the pair set");
          break;
        }
      next_sweep_ = extracted_ + std::max<std::uint64_t>(4096, todo_.size() - todo_head_);
    }
  }

  void check_pop_premise(const TodoEntry& e, const Transition& t, PayloadId succ) {
    if (!tlm_.contains(e.root, e.state, e.payload))
      violation("pop recorded without its source pair in the store");
    if (t.op.kind != StackOpKind::Pop)
      violation("pop recorded from a non-pop transition");
    if (!successor_exists(e.payload, t, succ))
      violation("pop successor does not match its premise");
  }

  void check_push_premise(const TodoEntry& e, const Transition& t, PayloadId succ,
                          RootId dest) {
    if (!tlm_.contains(e.root, e.state, e.payload))
      violation("push recorded without its source pair in the store");
    if (t.op.kind != StackOpKind::Push)
      violation("push recorded from a non-push transition");
    if (!successor_exists(e.payload, t, succ))
      violation("push successor does not match its premise");
    if (!root_match(succ, tlm_.roots[dest].payload))
      violation("push destination root does not match the pushed node");
  }

  bool successor_exists(PayloadId src, const Transition& t, PayloadId expect) {
    scratch_.clear();
    domain_.successors(src, t, scratch_);
    return std::find(scratch_.begin(), scratch_.end(), expect) != scratch_.end();
  }

  // Shadow rule interpreter: before a pop-rule addition, re-derive the full
  // premise chain of the rule from first principles.
  void check_pop_rule(RootId outer, const Provenance& prov, StateId q2, PayloadId p2) {
    if (!tlm_.contains(outer, prov.src_state, prov.src_payload))
      violation("pop rule: push premise pair missing from the store");
    const Transition& push_t = model_->transitions[prov.trans];
    const Transition& pop_t = model_->transitions[prov.pop_trans];
    if (push_t.op.kind != StackOpKind::Push || pop_t.op.kind != StackOpKind::Pop ||
        push_t.op.symbol != pop_t.op.symbol)
      violation("pop rule: stack operations do not match");
    scratch_.clear();
    domain_.successors(prov.src_payload, push_t, scratch_);
    bool matched = false;
    for (PayloadId s : scratch_)
      matched = matched || root_match(s, tlm_.roots[prov.inner_root].payload);
    if (!matched) violation("pop rule: pushed zone not equivalent to its root");
    if (!tlm_.contains(prov.inner_root, prov.inner_state, prov.inner_payload))
      violation("pop rule: inner premise pair missing from the store");
    if (pop_t.src != prov.inner_state || pop_t.tgt != q2)
      violation("pop rule: pop transition endpoints do not match");
    if (!successor_exists(prov.inner_payload, pop_t, p2))
      violation("pop rule: conclusion zone does not match the pop successor");
  }

  // main loop pieces ----------------------------------------------------------

  bool todo_empty() const { return todo_head_ >= todo_.size(); }

  TodoEntry take() {
    if (cfg_.order == TodoOrder::Lifo) {
      TodoEntry e = todo_.back();
      todo_.pop_back();
      return e;
    }
    return todo_[todo_head_++];
  }

  void handle_nop(const TodoEntry& e, const Transition& t, PayloadId p2) {
    if (!is_new_node(e.root, t.tgt, p2)) return;
    Provenance prov{Provenance::Rule::Internal, e.state, e.payload, t.decl_index};
    add_pair(e.root, t.tgt, p2, prov);
    push_todo(e.root, t.tgt, p2);
  }

  void handle_push(const TodoEntry& e, const Transition& t, PayloadId p2) {
    const SymbolId a = t.op.symbol;
    auto [is_new, rep] = find_root(t.tgt, p2);
    if (is_new) {
      rep = create_root(t.tgt, p2);
      add_pair(rep, t.tgt, p2, Provenance{Provenance::Rule::PushSelf});
      push_todo(rep, t.tgt, p2);
    }
    Tlm::PushBucket& bucket = tlm_.roots[rep].pushes[a];
    if (bucket.members.count(e.root)) return;  // isNewPush
    if (cfg_.check_invariants) check_push_premise(e, t, p2, rep);
    bucket.members.insert(e.root);
    bucket.order.push_back({e.root, e.state, e.payload, t.decl_index});
    // Match against pops already recorded at the representative root.
    const auto snapshot = tlm_.roots[rep].pops[a].order;
    for (const Tlm::PopEntry& pop : snapshot) {
      if (stop_) return;
      if (!is_new_node(e.root, pop.state, pop.payload)) continue;
      Provenance prov{Provenance::Rule::Pop, e.state,    e.payload,  t.decl_index,
                      rep,                   pop.src_state, pop.src_payload, pop.trans};
      if (cfg_.check_invariants) check_pop_rule(e.root, prov, pop.state, pop.payload);
      add_pair(e.root, pop.state, pop.payload, prov);
      push_todo(e.root, pop.state, pop.payload);
    }
  }

  void handle_pop(const TodoEntry& e, const Transition& t, PayloadId p2) {
    const SymbolId a = t.op.symbol;
    if (!is_new_pop(e.root, a, t.tgt, p2)) return;
    if (cfg_.check_invariants) check_pop_premise(e, t, p2);
    Tlm::PopBucket& bucket = tlm_.roots[e.root].pops[a];
    bucket.order.push_back({t.tgt, p2, e.state, e.payload, t.decl_index});
    bucket.by_state[t.tgt].push_back(p2);
    bucket.members.insert(node_key(t.tgt, p2));
    // Match against pushes already recorded into this root.
    const auto snapshot = tlm_.roots[e.root].pushes[a].order;
    for (const Tlm::PushEntry& push : snapshot) {
      if (stop_) return;
      if (!is_new_node(push.source, t.tgt, p2)) continue;
      Provenance prov{Provenance::Rule::Pop, push.src_state, push.src_payload,
                      push.trans,            e.root,         e.state,
                      e.payload,             t.decl_index};
      if (cfg_.check_invariants) check_pop_rule(push.source, prov, t.tgt, p2);
      add_pair(push.source, t.tgt, p2, prov);
      push_todo(push.source, t.tgt, p2);
    }
  }

  const PdtaModel* model_;
  EngineConfig cfg_;
  Domain domain_;
  Tlm tlm_;
  std::vector<TodoEntry> todo_;
  std::size_t todo_head_ = 0;  // consumed prefix in fifo order
  FlatMap64 root_index_;       // exact domains: (state, payload) -> root
  std::vector<PayloadId> succ_buf_;
  std::vector<PayloadId> scratch_;
  std::vector<std::unordered_map<std::uint64_t, Provenance>> provenance_;
  std::vector<std::string> violations_;
  std::uint64_t extracted_ = 0;
  std::uint64_t next_sweep_ = 4096;
  bool invariants_ok_ = true;
  bool stop_ = false;
};

template <typename Domain>
ReachResult ReachEngine<Domain>::run() {
  using Clock = std::chrono::steady_clock;
  const auto start_time = Clock::now();
  const auto deadline =
      cfg_.timeout_ms > 0
          ? start_time + std::chrono::milliseconds(cfg_.timeout_ms)
          : Clock::time_point::max();

  ReachResult result;
  result.unsound_mode = cfg_.mode == SearchMode::Naive;

  const PayloadId z0 = domain_.initial();
  const RootId r0 = create_root(model_->initial, z0);
  add_pair(r0, model_->initial, z0, Provenance{Provenance::Rule::Start});
  push_todo(r0, model_->initial, z0);

  std::uint64_t iterations = 0;
  while (!todo_empty() && !stop_) {
    if ((++iterations & 63) == 0 && Clock::now() >= deadline) {
      result.timed_out = true;
      break;
    }
    const TodoEntry e = take();
    if (cfg_.check_invariants) check_extracted(e);
    for (std::uint32_t ti : model_->outgoing[e.state]) {
      if (stop_) break;
      const Transition& t = model_->transitions[ti];
      succ_buf_.clear();
      domain_.successors(e.payload, t, succ_buf_);
      for (PayloadId p2 : succ_buf_) {
        if (stop_) break;
        switch (t.op.kind) {
          case StackOpKind::Nop: handle_nop(e, t, p2); break;
          case StackOpKind::Push: handle_push(e, t, p2); break;
          case StackOpKind::Pop: handle_pop(e, t, p2); break;
        }
      }
    }
  }

  const Tlm::Root& start_root = tlm_.roots[0];
  result.reachable.reserve(start_root.nodes_by_state.size());
  for (const auto& [state, bucket] : start_root.nodes_by_state)
    if (!bucket.empty()) result.reachable.push_back(state);
  std::sort(result.reachable.begin(), result.reachable.end());
  for (StateId q : result.reachable)
    result.nonempty = result.nonempty || model_->is_final(q);

  result.stats.pairs_added = tlm_.pairs_added;
  result.stats.roots = tlm_.roots.size();
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start_time).count();
  result.invariants_ok = invariants_ok_;
  result.invariant_violations = violations_;
  return result;
}

template <typename Domain>
bool ReachEngine<Domain>::verify_fixed_point() {
  Domain& domain = domain_;
  std::vector<PayloadId> succs;

  // Start rule: the initial pair must be present.
  if (tlm_.roots.empty()) return false;
  if (tlm_.roots[0].state != model_->initial) return false;
  if (!tlm_.contains(0, model_->initial, tlm_.roots[0].payload)) return false;

  auto covered = [&](RootId r, StateId q, PayloadId p) {
    if (tlm_.contains(r, q, p)) return true;
    if constexpr (!Domain::kExactOrder) {
      auto it = tlm_.roots[r].nodes_by_state.find(q);
      if (it != tlm_.roots[r].nodes_by_state.end())
        for (PayloadId existing : it->second)
          if (covers(p, existing)) return true;
    }
    return false;
  };

  // Pop successors of each root, collected once: every (a, q2, Z2) reachable
  // by one pop transition from a node of the root's set.
  struct PopOut {
    SymbolId symbol;
    StateId state;
    PayloadId payload;
  };
  FlatSet64 pop_checked;
  std::vector<std::vector<PopOut>> pop_out(tlm_.roots.size());
  for (RootId r = 0; r < tlm_.roots.size(); ++r) {
    std::vector<std::unordered_set<std::uint64_t>> seen(model_->symbol_count());
    for (const auto& [q, bucket] : tlm_.roots[r].nodes_by_state)
      for (PayloadId p : bucket)
        for (std::uint32_t ti : model_->outgoing[q]) {
          const Transition& t = model_->transitions[ti];
          if (t.op.kind != StackOpKind::Pop) continue;
          succs.clear();
          domain.successors(p, t, succs);
          for (PayloadId p2 : succs)
            if (seen[t.op.symbol].insert(node_key(t.tgt, p2)).second)
              pop_out[r].push_back({t.op.symbol, t.tgt, p2});
        }
  }

  for (RootId r = 0; r < tlm_.roots.size(); ++r) {
    for (const auto& [q, bucket] : tlm_.roots[r].nodes_by_state) {
      for (PayloadId p : bucket) {
        for (std::uint32_t ti : model_->outgoing[q]) {
          const Transition& t = model_->transitions[ti];
          succs.clear();
          domain.successors(p, t, succs);
          for (PayloadId p2 : succs) {
            switch (t.op.kind) {
              case StackOpKind::Nop:
                if (!covered(r, t.tgt, p2)) return false;
                break;
              case StackOpKind::Push: {
                // Push rule: an equivalent root must exist...
                bool found = false;
                for (RootId other : tlm_.roots_by_state[t.tgt]) {
                  if (!root_match(p2, tlm_.roots[other].payload)) continue;
                  found = true;
                  // ...and the Pop rule must be saturated through it. The
                  // conclusion set only depends on (r, other, symbol), so
                  // repeated push firings share one verification.
                  const std::uint64_t triple =
                      (static_cast<std::uint64_t>(r) << 40) ^
                      (static_cast<std::uint64_t>(other) << 16) ^ t.op.symbol;
                  if (!pop_checked.insert(triple)) continue;
                  for (const PopOut& out : pop_out[other]) {
                    if (out.symbol != t.op.symbol) continue;
                    if (!covered(r, out.state, out.payload)) return false;
                  }
                }
                if (!found) return false;
                break;
              }
              case StackOpKind::Pop:
                // Conclusions of the pop rule are checked from the push side.
                break;
            }
          }
        }
      }
    }
  }
  return true;
}

template <typename Domain>
std::vector<std::uint32_t> ReachEngine<Domain>::witness_trace(StateId q,
                                                              PayloadId p) const {
  std::vector<std::uint32_t> trace;
  // Recursive expansion over provenance: a pop-derived pair expands into
  // its push premise, the inner well-nested segment, and the pop itself.
  struct Expander {
    const ReachEngine* engine;
    std::vector<std::uint32_t>* out;
    void expand(RootId r, StateId q, PayloadId p) const {
      const auto& prov_map = engine->provenance_[r];
      auto it = prov_map.find(node_key(q, p));
      if (it == prov_map.end())
        throw std::logic_error("witness_trace: missing provenance record");
      const Provenance& prov = it->second;
      switch (prov.rule) {
        case Provenance::Rule::Start:
        case Provenance::Rule::PushSelf:
          return;  // the pair is the root's own self pair
        case Provenance::Rule::Internal:
          expand(r, prov.src_state, prov.src_payload);
          out->push_back(prov.trans);
          return;
        case Provenance::Rule::Pop:
          expand(r, prov.src_state, prov.src_payload);
          out->push_back(prov.trans);
          expand(prov.inner_root, prov.inner_state, prov.inner_payload);
          out->push_back(prov.pop_trans);
          return;
      }
    }
  };
  if (provenance_.empty()) throw std::logic_error("provenance recording was off");
  Expander{this, &trace}.expand(0, q, p);
  return trace;
}

}  // namespace pdta

#endif  // PDTA_ENGINE_HPP
