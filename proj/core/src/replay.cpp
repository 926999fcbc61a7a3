/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/replay.hpp"

#include <sstream>
#include <stdexcept>

namespace pdta {

bool replay_trace(const PdtaModel& m, const ReplayTrace& trace) {
  StateId state = m.initial;
  Zone zone = Zone::initial(m.clock_count());
  std::vector<SymbolId> stack;
  for (std::uint32_t ti : trace) {
    if (ti >= m.transitions.size())
      throw std::invalid_argument("trace refers to transition " + std::to_string(ti) +
                                  " of " + std::to_string(m.transitions.size()));
    const Transition& t = m.transitions[ti];
    if (t.src != state)
      throw std::invalid_argument("trace does not chain: transition " +
                                  std::to_string(ti) + " leaves " + m.states[t.src] +
                                  " but the run is at " + m.states[state]);
    switch (t.op.kind) {
      case StackOpKind::Nop: break;
      case StackOpKind::Push: stack.push_back(t.op.symbol); break;
      case StackOpKind::Pop:
        if (stack.empty() || stack.back() != t.op.symbol) return false;
        stack.pop_back();
        break;
    }
    zone = successor(zone, t.guard, t.resets);
    if (zone.is_empty()) return false;
    state = t.tgt;
  }
  return true;
}

ReplayTrace parse_trace(const std::string& text) {
  ReplayTrace trace;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) continue;
    std::uint64_t v = 0;
    const std::size_t start = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      v = v * 10 + (line[i] - '0');
      if (v > 0xffffffffull)
        throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                    ": index out of range");
      ++i;
    }
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start || i != line.size())
      throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                  ": expected a transition index");
    trace.push_back(static_cast<std::uint32_t>(v));
  }
  return trace;
}

}  // namespace pdta
