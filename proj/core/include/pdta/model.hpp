/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_MODEL_HPP
#define PDTA_MODEL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdta/bounds.hpp"
#include "pdta/zone.hpp"

namespace pdta {

using StateId = std::uint32_t;
using ClockId = std::uint32_t;
using SymbolId = std::uint32_t;

enum class CmpOp : std::uint8_t { Lt, Le, Gt, Ge };

// One atomic constraint. Equality atoms are expanded into a Le/Ge pair at
// parse time. Diagonal atoms (second clock present) are representable but
// rejected by validate(); the engine only accepts diagonal-free models.
struct GuardAtom {
  ClockId clock;
  std::optional<ClockId> minus_clock;  // set for diagonal atoms x - y ~ c
  CmpOp op;
  std::int64_t constant;

  bool is_diagonal() const { return minus_clock.has_value(); }
  ClockConstraint to_constraint() const;
};

struct Guard {
  std::vector<GuardAtom> atoms;

  std::vector<ClockConstraint> to_constraints() const;
};

enum class StackOpKind : std::uint8_t { Nop, Push, Pop };

struct StackOp {
  StackOpKind kind = StackOpKind::Nop;
  SymbolId symbol = 0;  // meaningful only when kind != Nop

  static StackOp nop() { return {}; }
  static StackOp push(SymbolId a) { return {StackOpKind::Push, a}; }
  static StackOp pop(SymbolId a) { return {StackOpKind::Pop, a}; }
};

struct Transition {
  StateId src;
  Guard guard;
  StackOp op;
  std::vector<ClockId> resets;
  StateId tgt;
  std::uint32_t decl_index;  // ordinal of declaration, drives exploration order
  std::string label;         // parsed and kept for diagnostics only
};

struct PdtaModel {
  std::string name;
  std::vector<std::string> states;
  std::vector<std::string> clocks;
  std::vector<std::string> symbols;
  StateId initial = 0;
  std::vector<StateId> finals;
  std::vector<Transition> transitions;
  // transitions leaving each state, in decl_index order
  std::vector<std::vector<std::uint32_t>> outgoing;

  std::uint32_t state_count() const { return static_cast<std::uint32_t>(states.size()); }
  std::uint32_t clock_count() const { return static_cast<std::uint32_t>(clocks.size()); }
  std::uint32_t symbol_count() const { return static_cast<std::uint32_t>(symbols.size()); }
  bool is_final(StateId q) const;

  // Largest constant appearing in any guard, 0 when there are none.
  std::int64_t max_constant() const;
};

// Incrementally built model; finalize() resolves the outgoing lists.
class ModelBuilder {
public:
  explicit ModelBuilder(std::string name);

  ClockId add_clock(const std::string& name);
  StateId add_state(const std::string& name, bool initial = false, bool final = false);
  SymbolId add_symbol(const std::string& name);
  void add_transition(StateId src, StateId tgt, Guard guard, StackOp op,
                      std::vector<ClockId> resets, std::string label = "");

  PdtaModel finalize();

  std::optional<StateId> state_id(const std::string& name) const;
  std::optional<ClockId> clock_id(const std::string& name) const;
  std::optional<SymbolId> symbol_id(const std::string& name) const;

private:
  PdtaModel model_;
  bool has_initial_ = false;
  std::unordered_map<std::string, StateId> state_ids_;
  std::unordered_map<std::string, ClockId> clock_ids_;
  std::unordered_map<std::string, SymbolId> symbol_ids_;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Parse the line-oriented model format (see README / the format grammar in
// the parser source). Throws ParseError on malformed input, undeclared
// identifiers or duplicate declarations.
PdtaModel parse_model(const std::string& text);

// Canonical text form; parse_model(to_text(m)) is structurally identical to m.
std::string to_text(const PdtaModel& m);

struct Diagnostic {
  std::string message;
  std::uint32_t transition = kNoTransition;  // offending transition, if any

  static constexpr std::uint32_t kNoTransition = 0xffffffffu;
};

// Engine admissibility: diagonal-free guards, constants within the overflow
// bound, well-formed initial/final states. Empty result means admissible.
std::vector<Diagnostic> validate(const PdtaModel& m);

// Maximum guard constant magnitude admitted by validate(); keeps all DBM
// arithmetic exact in 64 bits.
inline constexpr std::int64_t kMaxGuardConstant = std::int64_t{1} << 30;

// Global per-clock LU bounds: L(x) maximizes over lower-bound atoms
// (>=, >), U(x) over upper-bound atoms (<=, <); kNone when no atom exists.
LuBounds compute_lu_bounds(const PdtaModel& m);

// Guard intersection g ∩ Z as a canonical zone.
Zone intersect_guard(const Zone& z, const Guard& g);

// Z' = elapsed([R](g ∩ Z)) for a transition's guard and reset set.
Zone successor(const Zone& z, const Guard& g, std::span<const ClockId> resets);

}  // namespace pdta

#endif  // PDTA_MODEL_HPP
