/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include <doctest.h>

#include <json.hpp>

#include "pdta/benchgen.hpp"
#include "pdta/reach.hpp"
#include "pdta/run_report.hpp"

using namespace pdta;

namespace {

// Minimal CSV row splitter for the report's own output (quotes only around
// the model and reachable fields).
std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("JSON and CSV reports carry identical field values") {
  PdtaModel m = make_benchmark("B3", {3, 4});
  EngineConfig cfg;
  const ReachResult result = pdta_reach(m, cfg);
  const RunReport report = make_report(m, cfg, result, "B3 3 4");

  const nlohmann::json j = nlohmann::json::parse(report_json(report));
  CHECK(j.at("model") == "B3 3 4");
  CHECK(j.at("mode") == "sim");
  CHECK(j.at("order") == "lifo");
  CHECK(j.at("nonempty") == true);
  CHECK(j.at("pairs_added") == 9);
  CHECK(j.at("invariants_ok") == true);

  const std::string csv = report_csv(report);
  const auto lines_end = csv.find('\n');
  const auto header = split_csv_row(csv.substr(0, lines_end));
  const auto row = split_csv_row(csv.substr(lines_end + 1, csv.size() - lines_end - 2));
  REQUIRE(header.size() == 9);
  REQUIRE(row.size() == 9);

  CHECK(row[0] == j.at("model").get<std::string>());
  CHECK(row[1] == j.at("mode").get<std::string>());
  CHECK(row[2] == j.at("order").get<std::string>());
  CHECK(row[3] == (j.at("nonempty").get<bool>() ? "true" : "false"));
  std::string joined;
  for (const auto& s : j.at("reachable")) {
    if (!joined.empty()) joined += ";";
    joined += s.get<std::string>();
  }
  CHECK(row[4] == joined);
  CHECK(row[5] == std::to_string(j.at("pairs_added").get<std::uint64_t>()));
  CHECK(row[6] == std::to_string(j.at("roots").get<std::uint64_t>()));
  CHECK(std::stod(row[7]) == doctest::Approx(j.at("time_ms").get<double>()));
  CHECK(row[8] == (j.at("invariants_ok").get<bool>() ? "true" : "false"));
}

TEST_CASE("reports are deterministic apart from wall time") {
  PdtaModel m = make_benchmark("B5", {4, 2});
  EngineConfig cfg;
  const RunReport a = make_report(m, cfg, pdta_reach(m, cfg), "B5");
  const RunReport b = make_report(m, cfg, pdta_reach(m, cfg), "B5");
  CHECK(a.model == b.model);
  CHECK(a.mode == b.mode);
  CHECK(a.order == b.order);
  CHECK(a.nonempty == b.nonempty);
  CHECK(a.reachable == b.reachable);
  CHECK(a.pairs_added == b.pairs_added);
  CHECK(a.roots == b.roots);
  CHECK(a.invariants_ok == b.invariants_ok);
}
