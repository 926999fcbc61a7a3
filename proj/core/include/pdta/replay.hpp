/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_REPLAY_HPP
#define PDTA_REPLAY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pdta/model.hpp"

namespace pdta {

// A candidate run given as transition decl indices, with arbitrary delays
// interleaved. The stack effects must form a prefix-valid word.
using ReplayTrace = std::vector<std::uint32_t>;

// True iff some assignment of nonnegative delays realizes the trace with a
// valid stack: exact zone successors (no pruning) stay nonempty and every
// pop matches the symbol on top. Throws std::invalid_argument when the
// transitions do not chain from the initial state or an index is out of
// range.
bool replay_trace(const PdtaModel& m, const ReplayTrace& trace);

// Newline-separated decimal transition indices; '#' comments and blank
// lines are skipped. Throws std::invalid_argument on malformed lines.
ReplayTrace parse_trace(const std::string& text);

}  // namespace pdta

#endif  // PDTA_REPLAY_HPP
