/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_REGION_DOMAIN_HPP
#define PDTA_REGION_DOMAIN_HPP

#include <deque>
#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pdta/engine.hpp"
#include "pdta/region.hpp"

namespace pdta {

// Exact node domain over classical regions; node comparison is equality,
// which is the identity simulation and therefore strongly finite. Regions
// are interned and successor lists are memoized per (region, guard/reset
// class), since many transitions share the same guard and reset set.
class RegionDomain {
public:
  static constexpr bool kExactOrder = true;

  explicit RegionDomain(const PdtaModel& model)
      : ctx_(RegionContext::from_model(model)),
        regions_(std::make_unique<std::deque<Region>>()),
        index_(16, IdHash{regions_.get()}, IdEq{regions_.get()}) {
    // Successor computation only depends on (guard, resets); bucket the
    // transitions into classes so the memo is shared.
    std::vector<std::uint32_t> reps;
    class_of_.reserve(model.transitions.size());
    for (const Transition& t : model.transitions) {
      std::uint32_t cls = 0;
      for (; cls < reps.size(); ++cls) {
        const Transition& r = model.transitions[reps[cls]];
        if (same_effect(r, t)) break;
      }
      if (cls == reps.size()) reps.push_back(t.decl_index);
      class_of_.push_back(cls);
    }
    memo_.resize(reps.size());
  }

  PayloadId initial() { return intern(ctx_.initial()); }

  void successors(PayloadId src, const Transition& t, std::vector<PayloadId>& out) {
    auto& class_memo = memo_[class_of_[t.decl_index]];
    auto it = class_memo.find(src);
    if (it == class_memo.end()) {
      std::vector<PayloadId> ids;
      for (Region& r : ctx_.successors((*regions_)[src], t))
        ids.push_back(intern(std::move(r)));
      it = class_memo.emplace(src, std::move(ids)).first;
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
  }

  bool le(PayloadId a, PayloadId b) const { return a == b; }
  bool equiv(PayloadId a, PayloadId b) const { return a == b; }

  const Region& get(PayloadId id) const { return (*regions_)[id]; }
  const RegionContext& context() const { return ctx_; }
  std::size_t size() const { return regions_->size(); }

private:
  static bool same_effect(const Transition& a, const Transition& b) {
    if (a.resets != b.resets) return false;
    if (a.guard.atoms.size() != b.guard.atoms.size()) return false;
    for (std::size_t i = 0; i < a.guard.atoms.size(); ++i) {
      const GuardAtom& x = a.guard.atoms[i];
      const GuardAtom& y = b.guard.atoms[i];
      if (x.clock != y.clock || x.minus_clock != y.minus_clock || x.op != y.op ||
          x.constant != y.constant)
        return false;
    }
    return true;
  }

  PayloadId intern(Region&& r) {
    regions_->push_back(std::move(r));
    const PayloadId id = static_cast<PayloadId>(regions_->size() - 1);
    auto [it, inserted] = index_.insert(id);
    if (!inserted) {
      regions_->pop_back();
      return *it;
    }
    return id;
  }

  struct IdHash {
    const std::deque<Region>* regions;
    std::size_t operator()(PayloadId id) const { return (*regions)[id].hash(); }
  };
  struct IdEq {
    const std::deque<Region>* regions;
    bool operator()(PayloadId a, PayloadId b) const {
      return (*regions)[a] == (*regions)[b];
    }
  };

  RegionContext ctx_;
  std::vector<std::uint32_t> class_of_;  // transition decl_index -> class
  std::vector<std::unordered_map<PayloadId, std::vector<PayloadId>>> memo_;
  // behind a pointer so the index's hasher stays valid across moves
  std::unique_ptr<std::deque<Region>> regions_;
  std::unordered_set<PayloadId, IdHash, IdEq> index_;
};

}  // namespace pdta

#endif  // PDTA_REGION_DOMAIN_HPP
