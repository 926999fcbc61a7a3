/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_BOUNDS_HPP
#define PDTA_BOUNDS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace pdta {

// ── Bound ────────────────────────────────────────────────────────────────────
// A difference bound (op, c) with op ∈ {<, <=} plus the infinity bound.
// Encoded as a single signed integer 2*c + weak_bit, so that the natural
// integer order realizes the bound order (<,c) < (<=,c) < (<,c+1) and the
// sum of two bounds is O(1). Infinity is a sentinel that absorbs addition.

class Bound {
public:
  constexpr Bound() : raw_(kInfRaw) {}

  static constexpr Bound weak(std::int64_t value) {  // x - y <= value
    return Bound((value << 1) | 1);
  }
  static constexpr Bound strict(std::int64_t value) {  // x - y < value
    return Bound(value << 1);
  }
  static constexpr Bound infinity() { return Bound(kInfRaw); }
  static constexpr Bound zero() { return weak(0); }
  static constexpr Bound from_raw(std::int64_t raw) { return Bound(raw); }

  constexpr bool is_infinity() const { return raw_ == kInfRaw; }
  constexpr bool is_strict() const { return !is_infinity() && (raw_ & 1) == 0; }
  constexpr std::int64_t value() const { return raw_ >> 1; }
  constexpr std::int64_t raw() const { return raw_; }

  friend constexpr bool operator==(Bound a, Bound b) { return a.raw_ == b.raw_; }
  friend constexpr bool operator!=(Bound a, Bound b) { return a.raw_ != b.raw_; }
  friend constexpr bool operator<(Bound a, Bound b) { return a.raw_ < b.raw_; }
  friend constexpr bool operator<=(Bound a, Bound b) { return a.raw_ <= b.raw_; }
  friend constexpr bool operator>(Bound a, Bound b) { return a.raw_ > b.raw_; }
  friend constexpr bool operator>=(Bound a, Bound b) { return a.raw_ >= b.raw_; }

  // (op1,c1)+(op2,c2) = (strict if either strict else weak, c1+c2); inf absorbs.
  friend constexpr Bound operator+(Bound a, Bound b) {
    if (a.is_infinity() || b.is_infinity()) return infinity();
    return Bound(((a.value() + b.value()) << 1) | (a.raw_ & b.raw_ & 1));
  }

  // The complement bound: v_x - v_y ≺ c fails exactly when v_y - v_x ≺' -c
  // with strictness flipped. Undefined on infinity.
  constexpr Bound negated() const {
    return is_strict() ? weak(-value()) : strict(-value());
  }

  std::string to_string() const;

private:
  explicit constexpr Bound(std::int64_t raw) : raw_(raw) {}

  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();

  std::int64_t raw_;
};

// ── LuBounds ─────────────────────────────────────────────────────────────────
// Global per-clock lower-bound constants L and upper-bound constants U that
// parameterize the LU preorder. kNone stands for "no constraint of that
// polarity anywhere in the model" (the -infinity bound).

struct LuBounds {
  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

  std::vector<std::int64_t> lower;  // L, indexed by clock
  std::vector<std::int64_t> upper;  // U, indexed by clock

  explicit LuBounds(std::size_t clock_count = 0)
      : lower(clock_count, kNone), upper(clock_count, kNone) {}

  std::size_t clock_count() const { return lower.size(); }
};

}  // namespace pdta

#endif  // PDTA_BOUNDS_HPP
