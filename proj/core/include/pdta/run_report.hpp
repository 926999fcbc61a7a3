/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_RUN_REPORT_HPP
#define PDTA_RUN_REPORT_HPP

#include <string>
#include <vector>

#include "pdta/engine.hpp"
#include "pdta/model.hpp"

namespace pdta {

// Machine-readable record of one reachability run; serializes losslessly to
// JSON and to a CSV row with identical field values.
struct RunReport {
  std::string model;
  std::string mode;
  std::string order;
  bool nonempty = false;
  std::vector<std::string> reachable;  // state names, sorted by state id
  std::uint64_t pairs_added = 0;
  std::uint64_t roots = 0;
  double time_ms = 0.0;
  bool invariants_ok = true;
};

std::string to_string(SearchMode mode);
std::string to_string(TodoOrder order);

RunReport make_report(const PdtaModel& m, const EngineConfig& cfg,
                      const ReachResult& result, std::string model_name);

std::string report_json(const RunReport& r);
// Header line plus one data row.
std::string report_csv(const RunReport& r);

}  // namespace pdta

#endif  // PDTA_RUN_REPORT_HPP
