/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/reach.hpp"

#include <stdexcept>

#include "pdta/region_domain.hpp"
#include "pdta/zone_domain.hpp"

namespace pdta {

namespace {

void require_validated(const PdtaModel& m) {
  const std::vector<Diagnostic> diags = validate(m);
  if (!diags.empty())
    throw std::invalid_argument("model is not engine-admissible: " + diags.front().message);
}

template <typename Domain>
RunOutcome run_with(const PdtaModel& m, const EngineConfig& cfg, bool verify) {
  ReachEngine<Domain> engine(m, cfg, Domain(m));
  RunOutcome outcome;
  outcome.result = engine.run();
  if (verify) outcome.fixed_point_ok = engine.verify_fixed_point();
  return outcome;
}

}  // namespace

RunOutcome run_reachability(const PdtaModel& m, const EngineConfig& cfg,
                            bool verify_fixed_point) {
  require_validated(m);
  if (cfg.mode == SearchMode::Region)
    return run_with<RegionDomain>(m, cfg, verify_fixed_point);
  return run_with<ZoneDomain>(m, cfg, verify_fixed_point);
}

ReachResult pdta_reach(const PdtaModel& m, const EngineConfig& cfg) {
  return run_reachability(m, cfg, false).result;
}

ReachResult region_reach(const PdtaModel& m, EngineConfig cfg) {
  cfg.mode = SearchMode::Region;
  return run_reachability(m, cfg, false).result;
}

}  // namespace pdta
