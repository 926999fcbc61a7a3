/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_ZONE_DOMAIN_HPP
#define PDTA_ZONE_DOMAIN_HPP

#include <deque>
#include <memory>
#include <unordered_set>
#include <vector>

#include "pdta/engine.hpp"
#include "pdta/model.hpp"
#include "pdta/zone.hpp"

namespace pdta {

// Node domain over canonical zones, compared by the LU preorder with global
// per-clock bounds extracted from the model. Zones are interned so that the
// engine works on small ids; exact matrix equality drives the interning.
class ZoneDomain {
public:
  static constexpr bool kExactOrder = false;

  explicit ZoneDomain(const PdtaModel& model)
      : dim_(model.clock_count()),
        lu_(compute_lu_bounds(model)),
        zones_(std::make_unique<std::deque<Zone>>()),
        index_(16, IdHash{zones_.get()}, IdEq{zones_.get()}) {
    guards_.reserve(model.transitions.size());
    for (const Transition& t : model.transitions)
      guards_.push_back(t.guard.to_constraints());
  }

  PayloadId initial() { return intern(Zone::initial(dim_)); }

  void successors(PayloadId src, const Transition& t, std::vector<PayloadId>& out) {
    Zone s = zone_successor((*zones_)[src], guards_[t.decl_index], t.resets);
    if (!s.is_empty()) out.push_back(intern(std::move(s)));
  }

  bool le(PayloadId a, PayloadId b) const {
    return lu_le((*zones_)[a], (*zones_)[b], lu_);
  }
  bool equiv(PayloadId a, PayloadId b) const {
    return lu_equiv((*zones_)[a], (*zones_)[b], lu_);
  }

  PayloadId intern(Zone&& z) {
    zones_->push_back(std::move(z));
    const PayloadId id = static_cast<PayloadId>(zones_->size() - 1);
    auto [it, inserted] = index_.insert(id);
    if (!inserted) {
      zones_->pop_back();
      return *it;
    }
    return id;
  }

  const Zone& get(PayloadId id) const { return (*zones_)[id]; }
  const LuBounds& lu() const { return lu_; }
  std::size_t size() const { return zones_->size(); }

private:
  struct IdHash {
    const std::deque<Zone>* zones;
    std::size_t operator()(PayloadId id) const { return (*zones)[id].hash(); }
  };
  struct IdEq {
    const std::deque<Zone>* zones;
    bool operator()(PayloadId a, PayloadId b) const {
      return (*zones)[a] == (*zones)[b];
    }
  };

  std::uint32_t dim_;
  LuBounds lu_;
  std::vector<std::vector<ClockConstraint>> guards_;  // by decl_index
  // behind a pointer so the index's hasher stays valid across moves
  std::unique_ptr<std::deque<Zone>> zones_;
  std::unordered_set<PayloadId, IdHash, IdEq> index_;
};

}  // namespace pdta

#endif  // PDTA_ZONE_DOMAIN_HPP
