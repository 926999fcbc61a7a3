/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdta/benchgen.hpp"
#include "pdta/reach.hpp"
#include "pdta/replay.hpp"
#include "pdta/run_report.hpp"

namespace {

constexpr int kExitNonempty = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

pdta::PdtaModel load_model(const std::string& file, const std::string& gen_name,
                           const std::vector<std::int64_t>& gen_params,
                           std::string& display_name) {
  if (!gen_name.empty()) {
    display_name = gen_name;
    for (std::int64_t p : gen_params) display_name += " " + std::to_string(p);
    return pdta::make_benchmark(gen_name, gen_params);
  }
  display_name = file;
  return pdta::parse_model(read_input(file));
}

int cmd_run(const std::string& file, const std::string& gen_name,
            const std::vector<std::int64_t>& gen_params, const std::string& mode,
            const std::string& order, bool stop_early, bool check_invariants,
            bool verify, const std::string& stats_format, std::int64_t timeout_s) {
  std::string display_name;
  pdta::PdtaModel model = load_model(file, gen_name, gen_params, display_name);

  const auto diagnostics = pdta::validate(model);
  if (!diagnostics.empty()) {
    for (const auto& d : diagnostics) {
      std::cerr << "error: " << d.message;
      if (d.transition != pdta::Diagnostic::kNoTransition)
        std::cerr << " (transition " << d.transition << ", label '"
                  << model.transitions[d.transition].label << "')";
      std::cerr << "\n";
    }
    return kExitError;
  }

  pdta::EngineConfig cfg;
  if (mode == "sim") cfg.mode = pdta::SearchMode::Simulation;
  else if (mode == "equiv") cfg.mode = pdta::SearchMode::Equivalence;
  else if (mode == "naive") cfg.mode = pdta::SearchMode::Naive;
  else if (mode == "region") cfg.mode = pdta::SearchMode::Region;
  else throw CLI::ValidationError("--mode must be sim|equiv|naive|region");
  cfg.order = order == "fifo" ? pdta::TodoOrder::Fifo : pdta::TodoOrder::Lifo;
  cfg.stop_early = stop_early;
  cfg.check_invariants = check_invariants;
  cfg.timeout_ms = timeout_s * 1000;

  const pdta::RunOutcome outcome = pdta::run_reachability(model, cfg, verify);
  const pdta::ReachResult& result = outcome.result;

  if (result.unsound_mode)
    std::cout << "*** UNSOUND MODE: naive pruning may report unreachable states as "
                 "reachable ***\n";
  std::cout << "model:    " << display_name << " (" << model.name << ")\n";
  std::cout << "mode:     " << pdta::to_string(cfg.mode)
            << "  order: " << pdta::to_string(cfg.order) << "\n";
  if (result.timed_out)
    std::cout << "verdict:  TIMEOUT after " << timeout_s << " s (partial results)\n";
  else
    std::cout << "verdict:  " << (result.nonempty ? "nonempty" : "empty")
              << (result.nonempty ? " (a final state is well-nested reachable)" : "")
              << "\n";
  std::cout << "reachable:";
  for (pdta::StateId q : result.reachable) std::cout << " " << model.states[q];
  std::cout << "\n";
  std::cout << "nodes:    " << result.stats.pairs_added
            << "  roots: " << result.stats.roots << "  time: " << result.stats.elapsed_ms
            << " ms\n";
  if (check_invariants) {
    std::cout << "invariants: " << (result.invariants_ok ? "ok" : "VIOLATED") << "\n";
    for (const std::string& v : result.invariant_violations)
      std::cout << "  violation: " << v << "\n";
  }
  if (outcome.fixed_point_ok)
    std::cout << "fixed point: " << (*outcome.fixed_point_ok ? "verified" : "NOT a fixed point")
              << "\n";

  pdta::RunReport report = pdta::make_report(model, cfg, result, display_name);
  if (outcome.fixed_point_ok) report.invariants_ok &= *outcome.fixed_point_ok;
  if (stats_format == "json") std::cout << pdta::report_json(report) << "\n";
  else if (stats_format == "csv") std::cout << pdta::report_csv(report);

  if (result.timed_out) return kExitError;
  if (check_invariants && !result.invariants_ok) return kExitError;
  if (outcome.fixed_point_ok && !*outcome.fixed_point_ok) return kExitError;
  return result.nonempty ? kExitNonempty : kExitEmpty;
}

int cmd_generate(const std::string& name, const std::vector<std::int64_t>& params,
                 const std::string& out_path) {
  const std::string text = pdta::generate_benchmark(name, params);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

int cmd_replay(const std::string& model_file, const std::string& trace_file) {
  const pdta::PdtaModel model = pdta::parse_model(read_input(model_file));
  const pdta::ReplayTrace trace = pdta::parse_trace(read_input(trace_file));
  const bool ok = pdta::replay_trace(model, trace);
  std::cout << (ok ? "feasible" : "infeasible") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-nested control-state reachability for pushdown timed automata"};
  app.require_subcommand(1);

  // run
  std::string run_file, run_gen, run_mode = "sim", run_order = "lifo";
  std::string stats_format = "none";
  std::vector<std::int64_t> run_gen_params;
  bool stop_early = false, check_invariants = false, verify = false;
  std::int64_t timeout_s = 0;
  CLI::App* run = app.add_subcommand("run", "Decide reachability for a model");
  run->add_option("file", run_file, "model file ('-' for stdin)");
  run->add_option("--gen", run_gen, "generate a named benchmark instead of reading a file");
  run->add_option("--gen-params", run_gen_params, "parameters for --gen");
  run->add_option("--mode", run_mode, "sim|equiv|naive|region (default sim)");
  run->add_option("--order", run_order, "lifo|fifo worklist order (default lifo)");
  run->add_flag("--stop-early", stop_early, "stop as soon as a final state is reached");
  run->add_flag("--check-invariants", check_invariants,
                "enable runtime store/worklist invariant checking");
  run->add_flag("--verify", verify, "re-verify the final store as a rule fixed point");
  run->add_option("--stats-format", stats_format, "json|csv|none (default none)");
  run->add_option("--timeout", timeout_s, "wall-clock timeout in seconds (0 = none)");

  // generate
  std::string gen_name, gen_out;
  std::vector<std::int64_t> gen_params;
  CLI::App* gen = app.add_subcommand("generate", "Emit a benchmark model");
  gen->add_option("name", gen_name, "benchmark name (B1..B10, FIG3)")->required();
  gen->add_option("params", gen_params, "integer parameters");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  // replay
  std::string replay_model, replay_trace_file;
  CLI::App* rep = app.add_subcommand("replay", "Check feasibility of a transition trace");
  rep->add_option("model", replay_model, "model file")->required();
  rep->add_option("trace", replay_trace_file, "trace file (decimal transition indices)")
      ->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) {
      if (run_file.empty() && run_gen.empty())
        throw CLI::ValidationError("run needs a model file or --gen");
      return cmd_run(run_file, run_gen, run_gen_params, run_mode, run_order, stop_early,
                     check_invariants, verify, stats_format, timeout_s);
    }
    if (gen->parsed()) return cmd_generate(gen_name, gen_params, gen_out);
    if (rep->parsed()) return cmd_replay(replay_model, replay_trace_file);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitError : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
