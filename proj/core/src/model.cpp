/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/model.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pdta {

ClockConstraint GuardAtom::to_constraint() const {
  const DbmIndex x = clock + 1;
  const DbmIndex y = minus_clock ? *minus_clock + 1 : 0;
  switch (op) {
    case CmpOp::Le: return {x, y, Bound::weak(constant)};
    case CmpOp::Lt: return {x, y, Bound::strict(constant)};
    case CmpOp::Ge: return {y, x, Bound::weak(-constant)};
    case CmpOp::Gt: return {y, x, Bound::strict(-constant)};
  }
  return {x, y, Bound::infinity()};  // unreachable
}

std::vector<ClockConstraint> Guard::to_constraints() const {
  std::vector<ClockConstraint> out;
  out.reserve(atoms.size());
  for (const GuardAtom& a : atoms) out.push_back(a.to_constraint());
  return out;
}

bool PdtaModel::is_final(StateId q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

std::int64_t PdtaModel::max_constant() const {
  std::int64_t m = 0;
  for (const Transition& t : transitions)
    for (const GuardAtom& a : t.guard.atoms)
      m = std::max(m, a.constant < 0 ? -a.constant : a.constant);
  return m;
}

// ── ModelBuilder ─────────────────────────────────────────────────────────────

namespace {

template <typename Map>
std::optional<typename Map::mapped_type> lookup(const Map& map, const std::string& key) {
  auto it = map.find(key);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace

ModelBuilder::ModelBuilder(std::string name) { model_.name = std::move(name); }

std::optional<StateId> ModelBuilder::state_id(const std::string& name) const {
  return lookup(state_ids_, name);
}
std::optional<ClockId> ModelBuilder::clock_id(const std::string& name) const {
  return lookup(clock_ids_, name);
}
std::optional<SymbolId> ModelBuilder::symbol_id(const std::string& name) const {
  return lookup(symbol_ids_, name);
}

ClockId ModelBuilder::add_clock(const std::string& name) {
  if (clock_ids_.count(name))
    throw std::invalid_argument("duplicate clock: " + name);
  const ClockId id = static_cast<ClockId>(model_.clocks.size());
  model_.clocks.push_back(name);
  clock_ids_.emplace(name, id);
  return id;
}

StateId ModelBuilder::add_state(const std::string& name, bool initial, bool final) {
  if (state_ids_.count(name))
    throw std::invalid_argument("duplicate state: " + name);
  const StateId id = static_cast<StateId>(model_.states.size());
  model_.states.push_back(name);
  state_ids_.emplace(name, id);
  if (initial) {
    if (has_initial_)
      throw std::invalid_argument("second initial state: " + name);
    has_initial_ = true;
    model_.initial = id;
  }
  if (final) model_.finals.push_back(id);
  return id;
}

SymbolId ModelBuilder::add_symbol(const std::string& name) {
  if (symbol_ids_.count(name))
    throw std::invalid_argument("duplicate symbol: " + name);
  const SymbolId id = static_cast<SymbolId>(model_.symbols.size());
  model_.symbols.push_back(name);
  symbol_ids_.emplace(name, id);
  return id;
}

void ModelBuilder::add_transition(StateId src, StateId tgt, Guard guard, StackOp op,
                                  std::vector<ClockId> resets, std::string label) {
  if (src >= model_.states.size() || tgt >= model_.states.size())
    throw std::invalid_argument("transition endpoint not declared");
  if (op.kind != StackOpKind::Nop && op.symbol >= model_.symbols.size())
    throw std::invalid_argument("stack symbol not declared");
  for (ClockId c : resets)
    if (c >= model_.clocks.size())
      throw std::invalid_argument("reset clock not declared");
  Transition t;
  t.src = src;
  t.tgt = tgt;
  t.guard = std::move(guard);
  t.op = op;
  t.resets = std::move(resets);
  t.label = std::move(label);
  t.decl_index = static_cast<std::uint32_t>(model_.transitions.size());
  model_.transitions.push_back(std::move(t));
}

PdtaModel ModelBuilder::finalize() {
  if (!has_initial_) throw std::invalid_argument("no initial state declared");
  model_.outgoing.assign(model_.states.size(), {});
  for (const Transition& t : model_.transitions)
    model_.outgoing[t.src].push_back(t.decl_index);
  return std::move(model_);
}

// ── Parser ───────────────────────────────────────────────────────────────────
//
// Line-oriented, '#' starts a comment. Declarations:
//   system:<name>
//   clock:<name>
//   state:<name>[:initial][:final]
//   symbol:<name>
//   edge:<system>:<src>:<tgt>:<label>{provided: <atom> && ... : do: <c>=0; ...}[push|pop:<symbol>]
// The provided:/do: sections may be absent or empty (true guard, no resets),
// in either order; the braces themselves may be absent. Empty or absent
// square brackets mean nop. Atoms are <clock><op><int> with op in
// { <, <=, >, >=, == }; equality is expanded into <= and >=. Diagonal atoms
// <clock>-<clock><op><int> are accepted here and rejected by validate().

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

class LineParser {
public:
  LineParser(std::string_view text, std::size_t line_no)
      : text_(text), line_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, pos_ + 1, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // Characters up to (not including) any of `stops` or end of line, trimmed.
  std::string until(std::string_view stops) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos)
      ++pos_;
    std::string_view raw = text_.substr(start, pos_ - start);
    while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t'))
      raw.remove_prefix(1);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t'))
      raw.remove_suffix(1);
    return std::string(raw);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected nonnegative integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer constant out of range");
    }
    return v;
  }

  CmpOp cmp_op() {
    skip_ws();
    if (consume('<')) return consume('=') ? CmpOp::Le : CmpOp::Lt;
    if (consume('>')) return consume('=') ? CmpOp::Ge : CmpOp::Gt;
    if (consume('=')) {
      expect('=');
      return CmpOp::Le;  // caller expands equality
    }
    fail("expected comparison operator");
  }

  std::size_t line() const { return line_; }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct ParserState {
  std::optional<ModelBuilder> builder;
  std::string system_name;
};

ClockId resolve_clock(const ParserState& ps, LineParser& lp, const std::string& name) {
  auto id = ps.builder->clock_id(name);
  if (!id) lp.fail("undeclared clock: " + name);
  return *id;
}

// Parse "x>=1" or "x-y<=2"; equality yields two atoms.
void parse_atom(ParserState& ps, LineParser& lp, Guard& guard) {
  const std::string lhs = lp.identifier();
  lp.skip_ws();
  std::optional<ClockId> minus;
  if (lp.peek() == '-') {
    lp.expect('-');
    minus = resolve_clock(ps, lp, lp.identifier());
    lp.skip_ws();
  }
  const bool equality = lp.peek() == '=';
  const CmpOp op = lp.cmp_op();
  const std::int64_t c = lp.integer();
  const ClockId clock = resolve_clock(ps, lp, lhs);
  if (equality) {
    guard.atoms.push_back({clock, minus, CmpOp::Le, c});
    guard.atoms.push_back({clock, minus, CmpOp::Ge, c});
  } else {
    guard.atoms.push_back({clock, minus, op, c});
  }
}

void parse_guard_section(ParserState& ps, LineParser& lp, Guard& guard,
                         const std::string& section) {
  LineParser sp(section, lp.line());
  sp.skip_ws();
  if (sp.at_end()) return;
  for (;;) {
    parse_atom(ps, sp, guard);
    sp.skip_ws();
    if (sp.at_end()) break;
    sp.expect('&');
    sp.expect('&');
  }
}

void parse_do_section(ParserState& ps, LineParser& lp, std::vector<ClockId>& resets,
                      const std::string& section) {
  LineParser sp(section, lp.line());
  sp.skip_ws();
  if (sp.at_end()) return;
  for (;;) {
    const std::string name = sp.identifier();
    sp.skip_ws();
    sp.expect('=');
    if (sp.integer() != 0) sp.fail("only resets to zero are supported");
    resets.push_back(resolve_clock(ps, sp, name));
    sp.skip_ws();
    if (sp.at_end()) break;
    sp.expect(';');
    sp.skip_ws();
    if (sp.at_end()) break;  // tolerate a trailing ';'
  }
}

void parse_edge(ParserState& ps, LineParser& lp) {
  const std::string process = lp.until(":");
  lp.expect(':');
  if (process != ps.system_name)
    lp.fail("process '" + process + "' does not match system '" + ps.system_name + "'");
  const std::string src_name = lp.until(":");
  lp.expect(':');
  const std::string tgt_name = lp.until(":");
  lp.expect(':');
  const std::string label = lp.until("{[");

  auto src = ps.builder->state_id(src_name);
  if (!src) lp.fail("undeclared state: " + src_name);
  auto tgt = ps.builder->state_id(tgt_name);
  if (!tgt) lp.fail("undeclared state: " + tgt_name);

  Guard guard;
  std::vector<ClockId> resets;
  lp.skip_ws();
  if (lp.consume('{')) {
    // Sections "provided:"/"do:" in either order, both optional.
    std::string body = lp.until("}");
    lp.expect('}');
    LineParser bp(body, lp.line());
    bp.skip_ws();
    while (!bp.at_end()) {
      const std::string keyword = bp.identifier();
      bp.skip_ws();
      bp.expect(':');
      // Section content runs to the next top-level ':' that introduces a
      // keyword; atoms never contain ':', so scan to the ':' that follows
      // the next "provided"/"do" keyword or to the end.
      std::string content = bp.until(":");
      if (keyword == "provided")
        parse_guard_section(ps, bp, guard, content);
      else if (keyword == "do")
        parse_do_section(ps, bp, resets, content);
      else
        bp.fail("unknown section '" + keyword + "' (expected provided/do)");
      bp.skip_ws();
      if (bp.consume(':')) {
        bp.skip_ws();
        continue;
      }
      break;
    }
  }

  StackOp op = StackOp::nop();
  lp.skip_ws();
  if (lp.consume('[')) {
    lp.skip_ws();
    if (!lp.consume(']')) {
      const std::string kind = lp.identifier();
      lp.skip_ws();
      lp.expect(':');
      const std::string sym_name = lp.identifier();
      auto sym = ps.builder->symbol_id(sym_name);
      if (!sym) lp.fail("undeclared stack symbol: " + sym_name);
      if (kind == "push")
        op = StackOp::push(*sym);
      else if (kind == "pop")
        op = StackOp::pop(*sym);
      else
        lp.fail("expected push or pop, got '" + kind + "'");
      lp.skip_ws();
      lp.expect(']');
    }
  }
  lp.skip_ws();
  if (!lp.at_end()) lp.fail("trailing characters after edge");

  ps.builder->add_transition(*src, *tgt, std::move(guard), op, std::move(resets), label);
}

}  // namespace

PdtaModel parse_model(const std::string& text) {
  ParserState ps;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string raw;
  bool saw_initial = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    LineParser lp(raw, line_no);
    lp.skip_ws();
    if (lp.at_end()) continue;
    const std::string keyword = lp.identifier();
    lp.expect(':');
    if (keyword == "system") {
      if (ps.builder) lp.fail("duplicate system declaration");
      ps.system_name = lp.until("");
      if (ps.system_name.empty()) lp.fail("missing system name");
      ps.builder.emplace(ps.system_name);
      continue;
    }
    if (!ps.builder) lp.fail("system declaration must come first");
    if (keyword == "clock") {
      const std::string name = lp.identifier();
      if (ps.builder->clock_id(name)) lp.fail("duplicate clock: " + name);
      ps.builder->add_clock(name);
    } else if (keyword == "state") {
      const std::string name = lp.identifier();
      if (ps.builder->state_id(name)) lp.fail("duplicate state: " + name);
      bool initial = false, final = false;
      lp.skip_ws();
      while (lp.consume(':')) {
        const std::string flag = lp.identifier();
        if (flag == "initial") {
          if (saw_initial) lp.fail("second initial state: " + name);
          saw_initial = initial = true;
        } else if (flag == "final") {
          final = true;
        } else {
          lp.fail("unknown state flag '" + flag + "'");
        }
        lp.skip_ws();
      }
      if (!lp.at_end()) lp.fail("trailing characters after state");
      ps.builder->add_state(name, initial, final);
    } else if (keyword == "symbol") {
      const std::string name = lp.identifier();
      if (ps.builder->symbol_id(name)) lp.fail("duplicate symbol: " + name);
      ps.builder->add_symbol(name);
      lp.skip_ws();
      if (!lp.at_end()) lp.fail("trailing characters after symbol");
    } else if (keyword == "edge") {
      parse_edge(ps, lp);
    } else {
      lp.fail("unknown declaration '" + keyword + "'");
    }
  }
  if (!ps.builder) throw ParseError(line_no, 1, "missing system declaration");
  if (!saw_initial) throw ParseError(line_no, 1, "no initial state declared");
  return ps.builder->finalize();
}

// ── Printer ──────────────────────────────────────────────────────────────────

namespace {

const char* cmp_str(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

}  // namespace

std::string to_text(const PdtaModel& m) {
  std::ostringstream out;
  out << "system:" << m.name << "\n";
  for (const std::string& c : m.clocks) out << "clock:" << c << "\n";
  for (StateId q = 0; q < m.state_count(); ++q) {
    out << "state:" << m.states[q];
    if (q == m.initial) out << ":initial";
    if (m.is_final(q)) out << ":final";
    out << "\n";
  }
  for (const std::string& s : m.symbols) out << "symbol:" << s << "\n";
  for (const Transition& t : m.transitions) {
    out << "edge:" << m.name << ":" << m.states[t.src] << ":" << m.states[t.tgt] << ":"
        << t.label;
    const bool has_guard = !t.guard.atoms.empty();
    const bool has_resets = !t.resets.empty();
    if (has_guard || has_resets) {
      out << "{";
      if (has_guard) {
        out << "provided: ";
        for (std::size_t i = 0; i < t.guard.atoms.size(); ++i) {
          const GuardAtom& a = t.guard.atoms[i];
          if (i) out << " && ";
          out << m.clocks[a.clock];
          if (a.minus_clock) out << "-" << m.clocks[*a.minus_clock];
          out << cmp_str(a.op) << a.constant;
        }
        if (has_resets) out << " : ";
      }
      if (has_resets) {
        out << "do: ";
        for (std::size_t i = 0; i < t.resets.size(); ++i) {
          if (i) out << "; ";
          out << m.clocks[t.resets[i]] << "=0";
        }
      }
      out << "}";
    }
    out << "[";
    if (t.op.kind == StackOpKind::Push) out << "push:" << m.symbols[t.op.symbol];
    if (t.op.kind == StackOpKind::Pop) out << "pop:" << m.symbols[t.op.symbol];
    out << "]\n";
  }
  return out.str();
}

// ── Validation and LU bounds ─────────────────────────────────────────────────

std::vector<Diagnostic> validate(const PdtaModel& m) {
  std::vector<Diagnostic> out;
  if (m.initial >= m.state_count())
    out.push_back({"initial state out of range"});
  for (StateId f : m.finals)
    if (f >= m.state_count()) out.push_back({"final state out of range"});
  std::unordered_set<std::string> clock_names(m.clocks.begin(), m.clocks.end());
  if (clock_names.size() != m.clocks.size())
    out.push_back({"clock names are not unique"});
  for (const Transition& t : m.transitions) {
    for (const GuardAtom& a : t.guard.atoms) {
      if (a.is_diagonal())
        out.push_back({"diagonal constraint unsupported", t.decl_index});
      if (a.constant < 0)
        out.push_back({"negative guard constant", t.decl_index});
      if (a.constant > kMaxGuardConstant)
        out.push_back({"constant exceeds bound", t.decl_index});
      if (a.clock >= m.clock_count() ||
          (a.minus_clock && *a.minus_clock >= m.clock_count()))
        out.push_back({"guard clock out of range", t.decl_index});
    }
    if (t.op.kind != StackOpKind::Nop && t.op.symbol >= m.symbol_count())
      out.push_back({"stack symbol out of range", t.decl_index});
  }
  return out;
}

LuBounds compute_lu_bounds(const PdtaModel& m) {
  LuBounds lu(m.clock_count());
  for (const Transition& t : m.transitions)
    for (const GuardAtom& a : t.guard.atoms) {
      if (a.is_diagonal()) continue;  // models with diagonals never reach the engine
      switch (a.op) {
        case CmpOp::Ge:
        case CmpOp::Gt:
          lu.lower[a.clock] = std::max(lu.lower[a.clock], a.constant);
          break;
        case CmpOp::Le:
        case CmpOp::Lt:
          lu.upper[a.clock] = std::max(lu.upper[a.clock], a.constant);
          break;
      }
    }
  return lu;
}

Zone intersect_guard(const Zone& z, const Guard& g) {
  return z.constrained(g.to_constraints());
}

Zone successor(const Zone& z, const Guard& g, std::span<const ClockId> resets) {
  return zone_successor(z, g.to_constraints(), resets);
}

}  // namespace pdta
