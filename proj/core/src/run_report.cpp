/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/run_report.hpp"

#include <json.hpp>

namespace pdta {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Simulation: return "sim";
    case SearchMode::Equivalence: return "equiv";
    case SearchMode::Naive: return "naive";
    case SearchMode::Region: return "region";
  }
  return "?";
}

std::string to_string(TodoOrder order) {
  return order == TodoOrder::Lifo ? "lifo" : "fifo";
}

RunReport make_report(const PdtaModel& m, const EngineConfig& cfg,
                      const ReachResult& result, std::string model_name) {
  RunReport r;
  r.model = std::move(model_name);
  r.mode = to_string(cfg.mode);
  r.order = to_string(cfg.order);
  r.nonempty = result.nonempty;
  for (StateId q : result.reachable) r.reachable.push_back(m.states[q]);
  r.pairs_added = result.stats.pairs_added;
  r.roots = result.stats.roots;
  r.time_ms = result.stats.elapsed_ms;
  r.invariants_ok = result.invariants_ok;
  return r;
}

std::string report_json(const RunReport& r) {
  nlohmann::json j;
  j["model"] = r.model;
  j["mode"] = r.mode;
  j["order"] = r.order;
  j["nonempty"] = r.nonempty;
  j["reachable"] = r.reachable;
  j["pairs_added"] = r.pairs_added;
  j["roots"] = r.roots;
  j["time_ms"] = r.time_ms;
  j["invariants_ok"] = r.invariants_ok;
  return j.dump(2);
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv(const RunReport& r) {
  std::string reachable;
  for (std::size_t i = 0; i < r.reachable.size(); ++i) {
    if (i) reachable += ';';
    reachable += r.reachable[i];
  }
  std::string out =
      "model,mode,order,nonempty,reachable,pairs_added,roots,time_ms,invariants_ok\n";
  out += csv_quote(r.model) + ',' + r.mode + ',' + r.order + ',' +
         (r.nonempty ? "true" : "false") + ',' + csv_quote(reachable) + ',' +
         std::to_string(r.pairs_added) + ',' + std::to_string(r.roots) + ',' +
         std::to_string(r.time_ms) + ',' + (r.invariants_ok ? "true" : "false") + '\n';
  return out;
}

}  // namespace pdta
