/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/benchgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdta {

namespace {

Guard atom(ClockId x, CmpOp op, std::int64_t c) { return Guard{{{x, {}, op, c}}}; }

Guard eq(ClockId x, std::int64_t c) {
  return Guard{{{x, {}, CmpOp::Le, c}, {x, {}, CmpOp::Ge, c}}};
}

Guard operator&&(Guard a, const Guard& b) {
  a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
  return a;
}

std::string lbl(std::uint32_t i) { return "t" + std::to_string(i); }

// Adds transitions with automatic t<index> labels.
struct EdgeSink {
  ModelBuilder& b;
  std::uint32_t next = 0;

  void edge(StateId src, StateId tgt, Guard g = {}, StackOp op = StackOp::nop(),
            std::vector<ClockId> resets = {}) {
    b.add_transition(src, tgt, std::move(g), op, std::move(resets), lbl(next++));
  }
};

// B1: a chain of 8 unguarded pushes followed by a pop with y<=10 resetting x
// and a pop self-loop with x>=1 resetting x. Without pruning the pop loop
// generates ever-growing zones. Edge order: pushes along the chain, the
// chain pop, the loop pop.
PdtaModel make_b1() {
  ModelBuilder b("B1");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const StateId q0 = b.add_state("q0", true);
  std::vector<StateId> r;
  for (int i = 1; i <= 8; ++i) r.push_back(b.add_state("r" + std::to_string(i)));
  const StateId q1 = b.add_state("q1", false, true);
  const SymbolId a = b.add_symbol("a");
  EdgeSink e{b};
  e.edge(q0, r[0], {}, StackOp::push(a));
  for (int i = 0; i < 7; ++i) e.edge(r[i], r[i + 1], {}, StackOp::push(a));
  e.edge(r[7], q1, atom(y, CmpOp::Le, 10), StackOp::pop(a), {x});
  e.edge(q1, q1, atom(x, CmpOp::Ge, 1), StackOp::pop(a), {x});
  return b.finalize();
}

// B2(k) and FIG3 share one shape: a two-state push loop (x>=1 resetting x,
// then push under y<=k) against a chain of pops. B2(k) has k+1 pops, then a
// plain edge into the final state; FIG3 is the 2-pop original with the
// final state reached by the second pop directly.
PdtaModel make_b2(std::int64_t k) {
  ModelBuilder b("B2");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const StateId q0 = b.add_state("q0", true);
  const StateId q1 = b.add_state("q1");
  std::vector<StateId> c;
  for (std::int64_t i = 1; i <= k + 1; ++i)
    c.push_back(b.add_state("c" + std::to_string(i)));
  const StateId q2 = b.add_state("q2", false, true);
  const SymbolId a = b.add_symbol("a");
  EdgeSink e{b};
  e.edge(q0, q1, atom(x, CmpOp::Ge, 1), StackOp::nop(), {x});
  e.edge(q1, q0, atom(y, CmpOp::Le, k), StackOp::push(a));
  StateId prev = q0;
  for (StateId ci : c) {
    e.edge(prev, ci, {}, StackOp::pop(a));
    prev = ci;
  }
  e.edge(prev, q2);
  return b.finalize();
}

PdtaModel make_fig3() {
  ModelBuilder b("FIG3");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const StateId q0 = b.add_state("q0", true);
  const StateId q1 = b.add_state("q1");
  const StateId q2 = b.add_state("q2");
  const StateId q3 = b.add_state("q3", false, true);
  const SymbolId a = b.add_symbol("a");
  EdgeSink e{b};
  e.edge(q0, q1, atom(x, CmpOp::Ge, 1), StackOp::nop(), {x});
  e.edge(q1, q0, atom(y, CmpOp::Le, 1), StackOp::push(a));
  e.edge(q0, q2, {}, StackOp::pop(a));
  e.edge(q2, q3, {}, StackOp::pop(a));
  return b.finalize();
}

// B3(k1,k2): pushes of a1 reset x, the a2 push resets y; the a1 pops need
// x>=k1 and the closing pops need y<=k2, so the final state is reachable
// exactly when k1 <= k2.
PdtaModel make_b3(std::int64_t k1, std::int64_t k2) {
  ModelBuilder b("B3");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const StateId q1 = b.add_state("q1", true);
  const StateId q2 = b.add_state("q2");
  const StateId r1 = b.add_state("r1");
  const StateId r2 = b.add_state("r2");
  const StateId s1 = b.add_state("s1", false, true);
  const StateId s2 = b.add_state("s2");
  const SymbolId a = b.add_symbol("a");
  const SymbolId a1 = b.add_symbol("a1");
  const SymbolId a2 = b.add_symbol("a2");
  EdgeSink e{b};
  e.edge(q1, q2, {}, StackOp::push(a2), {y});
  e.edge(q1, q1, {}, StackOp::push(a1), {x});
  e.edge(q2, q2, {}, StackOp::push(a));
  e.edge(q2, q2, {}, StackOp::push(a1), {x});
  e.edge(q1, r1, atom(x, CmpOp::Ge, k1), StackOp::pop(a1));
  e.edge(q2, r2, atom(x, CmpOp::Ge, k1), StackOp::pop(a1));
  e.edge(r2, s2, atom(y, CmpOp::Le, k2), StackOp::pop(a));
  e.edge(r2, s1, atom(y, CmpOp::Le, k2), StackOp::pop(a2));
  return b.finalize();
}

// B4: one push-pop pair, no push/pop cycles; the pop window x3==1 is never
// open together with x1<=1 && x2>=1, so the final state stays unreachable.
PdtaModel make_b4() {
  ModelBuilder b("B4");
  const ClockId x1 = b.add_clock("x1");
  const ClockId x2 = b.add_clock("x2");
  const ClockId x3 = b.add_clock("x3");
  const StateId q0 = b.add_state("q0", true);
  const StateId q1 = b.add_state("q1");
  const StateId q2 = b.add_state("q2");
  const StateId q3 = b.add_state("q3");
  const StateId q4 = b.add_state("q4");
  const StateId q5 = b.add_state("q5", false, true);
  const StateId q6 = b.add_state("q6");
  const SymbolId a = b.add_symbol("a");
  EdgeSink e{b};
  e.edge(q0, q1, {}, StackOp::nop(), {x1, x2});
  e.edge(q1, q2, atom(x1, CmpOp::Ge, 1), StackOp::push(a), {x3});
  e.edge(q1, q3, eq(x1, 1), StackOp::nop(), {x2});
  e.edge(q2, q6, eq(x1, 1) && atom(x2, CmpOp::Le, 3));
  e.edge(q6, q3, eq(x1, 1));
  e.edge(q6, q5, atom(x1, CmpOp::Le, 1) && atom(x2, CmpOp::Ge, 1) && eq(x3, 1),
         StackOp::pop(a));
  e.edge(q3, q4, {}, StackOp::nop(), {x1, x2});
  e.edge(q4, q5, eq(x1, 1) && eq(x2, 0));
  e.edge(q3, q4, eq(x1, 0));
  return b.finalize();
}

// B5(k1,k2): a chain of k1 segments r_i with a wait loop (x>=1 resetting x,
// return under y<=k2) on every segment; the first half of the chain edges
// push, the second half pops, so the final state needs an even k1. Edge
// order per segment: chain edge into r_i, then its loop.
PdtaModel make_b5(std::int64_t k1, std::int64_t k2) {
  ModelBuilder b("B5");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const StateId q0 = b.add_state("q0", true);
  std::vector<StateId> r, rp;
  for (std::int64_t i = 1; i <= k1; ++i) {
    r.push_back(b.add_state("r" + std::to_string(i)));
    rp.push_back(b.add_state("r" + std::to_string(i) + "p"));
  }
  const StateId q1 = b.add_state("q1", false, true);
  const SymbolId a = b.add_symbol("a");
  const std::int64_t pushes = (k1 + 1) / 2;
  EdgeSink e{b};
  for (std::int64_t i = 0; i < k1; ++i) {
    const StateId src = i == 0 ? q0 : r[i - 1];
    const StackOp op = i < pushes ? StackOp::push(a) : StackOp::pop(a);
    e.edge(src, r[i], {}, op);
    e.edge(r[i], rp[i], atom(x, CmpOp::Ge, 1), StackOp::nop(), {x});
    e.edge(rp[i], r[i], atom(y, CmpOp::Le, k2));
  }
  e.edge(r[k1 - 1], q1);
  return b.finalize();
}

// B6(k1,k2,k3): pushes are taken under y<=k1 at a rate of one per time unit
// (x==1 resetting x); pops require y<k2 after y is reset at the phase
// switch, again one per unit; q5 is reachable iff k1 < k2. The z1/z2 wait
// loop multiplies zones without touching the stack.
PdtaModel make_b6(std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  ModelBuilder b("B6");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const ClockId z1 = b.add_clock("z1");
  const ClockId z2 = b.add_clock("z2");
  const StateId q1 = b.add_state("q1", true);
  const StateId q1p = b.add_state("q1p");
  const StateId q2 = b.add_state("q2");
  const StateId q3 = b.add_state("q3");
  const StateId q4 = b.add_state("q4");
  const StateId q5 = b.add_state("q5", false, true);
  const SymbolId a = b.add_symbol("a");
  EdgeSink e{b};
  e.edge(q1, q2, eq(x, 1), StackOp::nop(), {x});
  e.edge(q2, q1, atom(y, CmpOp::Le, k1), StackOp::push(a));
  e.edge(q1, q1p, atom(z1, CmpOp::Ge, 1), StackOp::nop(), {z1});
  e.edge(q1p, q1, atom(z2, CmpOp::Le, k3));
  e.edge(q1, q3, eq(x, 0) && atom(y, CmpOp::Ge, k1), StackOp::nop(), {x, y});
  e.edge(q3, q4, eq(x, 1), StackOp::nop(), {x});
  e.edge(q4, q3, atom(y, CmpOp::Lt, k2), StackOp::pop(a));
  e.edge(q3, q5);
  return b.finalize();
}

// B7: open guards on both pushes; the pop cycle consumes b,a,a, and x>1
// between a-pushes together with y<2 before a b-push rules out the b-a-a
// stack prefix, so the language is empty.
PdtaModel make_b7() {
  ModelBuilder b("B7");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const ClockId z = b.add_clock("z");
  const StateId q1 = b.add_state("q1", true);
  const StateId q2 = b.add_state("q2");
  const StateId q3 = b.add_state("q3");
  const StateId q4 = b.add_state("q4");
  const StateId q5 = b.add_state("q5", false, true);
  const SymbolId a = b.add_symbol("a");
  const SymbolId bb = b.add_symbol("b");
  EdgeSink e{b};
  e.edge(q1, q1, atom(x, CmpOp::Gt, 1), StackOp::push(a), {x});
  e.edge(q1, q1, atom(y, CmpOp::Lt, 2), StackOp::push(bb), {y});
  e.edge(q1, q2, eq(x, 0) && eq(z, 20));
  e.edge(q2, q3, {}, StackOp::pop(bb));
  e.edge(q3, q4, {}, StackOp::pop(a));
  e.edge(q4, q2, {}, StackOp::pop(a));
  e.edge(q2, q5);
  return b.finalize();
}

// B8: two sequential push-pop pairs with clock hand-offs; final state is
// reachable.
PdtaModel make_b8() {
  ModelBuilder b("B8");
  const ClockId x1 = b.add_clock("x1");
  const ClockId x2 = b.add_clock("x2");
  const ClockId x3 = b.add_clock("x3");
  const ClockId x4 = b.add_clock("x4");
  std::vector<StateId> q;
  q.push_back(b.add_state("q1", true));
  for (int i = 2; i <= 7; ++i) q.push_back(b.add_state("q" + std::to_string(i)));
  q.push_back(b.add_state("q8", false, true));
  const SymbolId a = b.add_symbol("a");
  const SymbolId bb = b.add_symbol("b");
  EdgeSink e{b};
  e.edge(q[0], q[1], {}, StackOp::push(a), {x2});
  e.edge(q[1], q[2], eq(x2, 1), StackOp::pop(a), {x4});
  e.edge(q[2], q[3], eq(x4, 0), StackOp::push(bb), {x3});
  e.edge(q[3], q[4], atom(x3, CmpOp::Ge, 1), StackOp::pop(bb), {x1});
  e.edge(q[4], q[5], {}, StackOp::nop(), {x1});
  e.edge(q[5], q[6], {}, StackOp::push(a), {x2});
  e.edge(q[6], q[7], atom(x2, CmpOp::Ge, 1), StackOp::pop(a));
  return b.finalize();
}

// B9(k1,k2): k1 four-push loops around q0 over pairwise distinct symbols,
// a wait loop on each middle state, and a single pop line that matches the
// loops taken in the order k1,...,1. Edge order: all loop pushes, the pop
// line, then the wait loops.
PdtaModel make_b9(std::int64_t k1, std::int64_t k2) {
  ModelBuilder b("B9");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const StateId q0 = b.add_state("q0", true);
  std::vector<StateId> r, rp;
  for (std::int64_t i = 1; i <= 3 * k1; ++i)
    r.push_back(b.add_state("r" + std::to_string(i)));
  for (std::int64_t j = 0; j < k1; ++j)
    rp.push_back(b.add_state("r" + std::to_string(3 * j + 2) + "p"));
  std::vector<StateId> s;
  for (std::int64_t i = 1; i <= 4 * k1 - 1; ++i)
    s.push_back(b.add_state("s" + std::to_string(i)));
  const StateId sf = b.add_state("sf", false, true);
  std::vector<SymbolId> sym;
  for (std::int64_t i = 1; i <= 4 * k1; ++i)
    sym.push_back(b.add_symbol("a" + std::to_string(i)));
  EdgeSink e{b};
  for (std::int64_t j = 0; j < k1; ++j) {
    e.edge(q0, r[3 * j], {}, StackOp::push(sym[4 * j]));
    e.edge(r[3 * j], r[3 * j + 1], {}, StackOp::push(sym[4 * j + 1]));
    e.edge(r[3 * j + 1], r[3 * j + 2], {}, StackOp::push(sym[4 * j + 2]));
    e.edge(r[3 * j + 2], q0, {}, StackOp::push(sym[4 * j + 3]));
  }
  StateId prev = q0;
  std::size_t si = 0;
  for (std::int64_t j = 0; j < k1; ++j)
    for (int d = 3; d >= 0; --d) {
      const StateId tgt = si < s.size() ? s[si++] : sf;
      e.edge(prev, tgt, {}, StackOp::pop(sym[4 * j + d]));
      prev = tgt;
    }
  for (std::int64_t j = 0; j < k1; ++j) {
    e.edge(r[3 * j + 1], rp[j], atom(x, CmpOp::Ge, 1), StackOp::nop(), {x});
    e.edge(rp[j], r[3 * j + 1], atom(y, CmpOp::Le, k2));
  }
  return b.finalize();
}

// B10: like B7 with a two-symbol pop cycle a,b and the entry window z==4;
// the final state is reachable.
PdtaModel make_b10() {
  ModelBuilder b("B10");
  const ClockId x = b.add_clock("x");
  const ClockId y = b.add_clock("y");
  const ClockId z = b.add_clock("z");
  const StateId q1 = b.add_state("q1", true);
  const StateId q2 = b.add_state("q2");
  const StateId q3 = b.add_state("q3");
  const StateId q4 = b.add_state("q4", false, true);
  const SymbolId a = b.add_symbol("a");
  const SymbolId bb = b.add_symbol("b");
  EdgeSink e{b};
  e.edge(q1, q1, atom(x, CmpOp::Gt, 1), StackOp::push(a), {x});
  e.edge(q1, q1, atom(y, CmpOp::Lt, 2), StackOp::push(bb), {y});
  e.edge(q1, q2, eq(x, 0) && eq(z, 4));
  e.edge(q2, q3, {}, StackOp::pop(a));
  e.edge(q3, q2, {}, StackOp::pop(bb));
  e.edge(q2, q4);
  return b.finalize();
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

void check_arity(const std::string& name, std::span<const std::int64_t> params,
                 std::size_t expect) {
  if (params.size() != expect)
    throw std::invalid_argument(name + " takes " + std::to_string(expect) +
                                " parameter(s), got " + std::to_string(params.size()));
  for (std::int64_t p : params)
    if (p <= 0) throw std::invalid_argument(name + ": parameters must be positive");
}

}  // namespace

std::vector<std::string> benchmark_names() {
  return {"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10", "FIG3"};
}

PdtaModel make_benchmark(const std::string& name, std::span<const std::int64_t> params) {
  const std::string n = upper(name);
  if (n == "B1") { check_arity(n, params, 0); return make_b1(); }
  if (n == "B2") { check_arity(n, params, 1); return make_b2(params[0]); }
  if (n == "B3") { check_arity(n, params, 2); return make_b3(params[0], params[1]); }
  if (n == "B4") { check_arity(n, params, 0); return make_b4(); }
  if (n == "B5") { check_arity(n, params, 2); return make_b5(params[0], params[1]); }
  if (n == "B6") { check_arity(n, params, 3); return make_b6(params[0], params[1], params[2]); }
  if (n == "B7") { check_arity(n, params, 0); return make_b7(); }
  if (n == "B8") { check_arity(n, params, 0); return make_b8(); }
  if (n == "B9") { check_arity(n, params, 2); return make_b9(params[0], params[1]); }
  if (n == "B10") { check_arity(n, params, 0); return make_b10(); }
  if (n == "FIG3") { check_arity(n, params, 0); return make_fig3(); }
  throw std::invalid_argument("unknown benchmark '" + name + "'");
}

std::string generate_benchmark(const std::string& name,
                               std::span<const std::int64_t> params) {
  return to_text(make_benchmark(name, params));
}

}  // namespace pdta
