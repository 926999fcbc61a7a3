/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_REACH_HPP
#define PDTA_REACH_HPP

#include <optional>

#include "pdta/engine.hpp"
#include "pdta/model.hpp"

namespace pdta {

// Well-nested control-state reachability of a validated model under the
// configured mode/order. Throws std::invalid_argument when validate() is
// not clean.
ReachResult pdta_reach(const PdtaModel& m, const EngineConfig& cfg = {});

// Reachability in the exact region oracle domain (mode forced to Region).
ReachResult region_reach(const PdtaModel& m, EngineConfig cfg = {});

struct RunOutcome {
  ReachResult result;
  std::optional<bool> fixed_point_ok;  // present when verification was requested
};

// Run and optionally re-verify the final store against the rule system.
RunOutcome run_reachability(const PdtaModel& m, const EngineConfig& cfg,
                            bool verify_fixed_point);

}  // namespace pdta

#endif  // PDTA_REACH_HPP
