/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_REGION_HPP
#define PDTA_REGION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdta/model.hpp"

namespace pdta {

// ── Region ───────────────────────────────────────────────────────────────────
// A classical clock region for per-clock bounds M(x): for every clock either
// "above M(x)" (encoded as integer part M(x)+1) or an integer part in
// 0..M(x) plus a fractional class. Class 0 means the fractional part is
// exactly zero; positive classes enumerate the distinct nonzero fractional
// values in increasing order, contiguously and each nonempty. The encoding
// is canonical: two regions are equal iff their encodings are equal.

struct Region {
  std::vector<std::uint32_t> ip;  // integer part; M(x)+1 encodes "above max"
  std::vector<std::uint8_t> fc;   // fractional class; 0 when integral

  bool operator==(const Region&) const = default;
  std::size_t hash() const;
};

class RegionContext {
public:
  // Per-clock bound M(x) = max(L(x), U(x), 0) from the model's LU bounds.
  static RegionContext from_model(const PdtaModel& m);

  explicit RegionContext(std::vector<std::int64_t> max_bound)
      : max_(std::move(max_bound)) {}

  std::size_t clock_count() const { return max_.size(); }
  std::int64_t max_bound(ClockId x) const { return max_[x]; }

  // Region of the all-zeros valuation.
  Region initial() const;

  bool is_above(const Region& r, ClockId x) const {
    return r.ip[x] > static_cast<std::uint64_t>(max_[x]);
  }

  // The immediate delay successor; the all-above region is its own successor.
  Region delay_successor(const Region& r) const;

  // Guard satisfaction; the region is uniform for constants <= M, which the
  // engine admissibility checks guarantee. Diagonal atoms are not supported.
  bool satisfies(const Region& r, const Guard& g) const;

  Region reset(const Region& r, std::span<const ClockId> clocks) const;

  // All regions reachable by a delay followed by the transition: the delay
  // chain of r filtered by the guard, mapped through the reset, deduplicated
  // in chain order.
  std::vector<Region> successors(const Region& r, const Transition& t) const;

  // Classical count bound prod(2M(x)+2) * |X|! * 2^|X|, saturating.
  std::uint64_t classical_region_bound() const;

  std::string to_string(const Region& r,
                        std::span<const std::string> clock_names = {}) const;

private:
  void normalize(Region& r) const;

  std::vector<std::int64_t> max_;
};

struct RegionHash {
  std::size_t operator()(const Region& r) const { return r.hash(); }
};

}  // namespace pdta

#endif  // PDTA_REGION_HPP
