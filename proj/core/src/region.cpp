/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/region.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pdta {

std::size_t Region::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < ip.size(); ++i) {
    h ^= ip[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= fc[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

RegionContext RegionContext::from_model(const PdtaModel& m) {
  const LuBounds lu = compute_lu_bounds(m);
  std::vector<std::int64_t> max_bound(m.clock_count(), 0);
  for (ClockId x = 0; x < m.clock_count(); ++x) {
    if (lu.lower[x] != LuBounds::kNone)
      max_bound[x] = std::max(max_bound[x], lu.lower[x]);
    if (lu.upper[x] != LuBounds::kNone)
      max_bound[x] = std::max(max_bound[x], lu.upper[x]);
  }
  return RegionContext(std::move(max_bound));
}

Region RegionContext::initial() const {
  Region r;
  r.ip.assign(clock_count(), 0);
  r.fc.assign(clock_count(), 0);
  return r;
}

// Renumber the fractional classes of non-above clocks to 0,1..m with
// positive classes contiguous, nonempty and order-preserving.
void RegionContext::normalize(Region& r) const {
  std::vector<std::uint8_t> used;
  for (ClockId x = 0; x < clock_count(); ++x) {
    if (is_above(r, x)) {
      r.fc[x] = 0;
      continue;
    }
    if (r.fc[x] > 0) used.push_back(r.fc[x]);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (ClockId x = 0; x < clock_count(); ++x) {
    if (is_above(r, x) || r.fc[x] == 0) continue;
    const auto pos = std::lower_bound(used.begin(), used.end(), r.fc[x]);
    r.fc[x] = static_cast<std::uint8_t>(1 + (pos - used.begin()));
  }
}

Region RegionContext::delay_successor(const Region& r) const {
  Region s = r;
  bool any_integral = false;
  bool all_above = true;
  std::uint8_t highest = 0;
  for (ClockId x = 0; x < clock_count(); ++x) {
    if (is_above(r, x)) continue;
    all_above = false;
    if (r.fc[x] == 0)
      any_integral = true;
    else
      highest = std::max(highest, r.fc[x]);
  }
  if (all_above) return s;

  if (any_integral) {
    // The zero-fraction clocks enter the next open interval together; those
    // sitting exactly at their bound go above it instead.
    for (ClockId x = 0; x < clock_count(); ++x) {
      if (is_above(r, x)) continue;
      if (r.fc[x] == 0) {
        if (static_cast<std::int64_t>(r.ip[x]) >= max_[x])
          s.ip[x] = static_cast<std::uint32_t>(max_[x] + 1);  // above
        else
          s.fc[x] = 1;
      } else {
        s.fc[x] = static_cast<std::uint8_t>(r.fc[x] + 1);
      }
    }
  } else {
    // The largest fractional class reaches the next integer first.
    for (ClockId x = 0; x < clock_count(); ++x) {
      if (is_above(r, x) || r.fc[x] != highest) continue;
      const std::uint32_t next = r.ip[x] + 1;
      s.ip[x] = next;  // == M+1 encodes "above"
      s.fc[x] = 0;
    }
  }
  normalize(s);
  return s;
}

bool RegionContext::satisfies(const Region& r, const Guard& g) const {
  for (const GuardAtom& a : g.atoms) {
    if (a.is_diagonal())
      throw std::invalid_argument("diagonal guards are not supported on regions");
    assert(a.constant <= max_[a.clock]);
    const ClockId x = a.clock;
    const std::int64_t c = a.constant;
    bool sat;
    if (is_above(r, x)) {
      sat = a.op == CmpOp::Ge || a.op == CmpOp::Gt;  // x > M(x) >= c
    } else {
      const std::int64_t ip = r.ip[x];
      const bool integral = r.fc[x] == 0;
      switch (a.op) {
        case CmpOp::Ge: sat = ip >= c; break;
        case CmpOp::Gt: sat = ip > c || (ip == c && !integral); break;
        case CmpOp::Le: sat = ip < c || (ip == c && integral); break;
        case CmpOp::Lt: sat = ip < c; break;
        default: sat = false; break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Region RegionContext::reset(const Region& r, std::span<const ClockId> clocks) const {
  Region s = r;
  for (ClockId x : clocks) {
    s.ip[x] = 0;
    s.fc[x] = 0;
  }
  normalize(s);
  return s;
}

std::vector<Region> RegionContext::successors(const Region& r,
                                              const Transition& t) const {
  std::vector<Region> out;
  Region cur = r;
  for (;;) {
    if (satisfies(cur, t.guard)) {
      Region next = reset(cur, t.resets);
      if (std::find(out.begin(), out.end(), next) == out.end())
        out.push_back(std::move(next));
    }
    Region succ = delay_successor(cur);
    if (succ == cur) break;
    cur = std::move(succ);
  }
  return out;
}

std::uint64_t RegionContext::classical_region_bound() const {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t bound = 1;
  auto mul = [&](std::uint64_t f) {
    if (bound > cap / f)
      bound = cap;
    else
      bound *= f;
  };
  for (std::int64_t m : max_) mul(static_cast<std::uint64_t>(2 * m + 2));
  for (std::size_t k = 1; k <= clock_count(); ++k) mul(k);  // |X|!
  for (std::size_t k = 0; k < clock_count(); ++k) mul(2);   // 2^|X|
  return bound;
}

std::string RegionContext::to_string(const Region& r,
                                     std::span<const std::string> clock_names) const {
  std::ostringstream out;
  out << "[";
  for (ClockId x = 0; x < clock_count(); ++x) {
    if (x) out << " ";
    if (x < clock_names.size())
      out << clock_names[x];
    else
      out << "x" << x;
    if (is_above(r, x)) {
      out << ">" << max_[x];
    } else {
      out << "=" << r.ip[x];
      if (r.fc[x] > 0) out << "+f" << static_cast<int>(r.fc[x]);
    }
  }
  out << "]";
  return out.str();
}

}  // namespace pdta
