/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_ZONE_HPP
#define PDTA_ZONE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdta/bounds.hpp"

namespace pdta {

// DBM index: 0 is the reference clock, clock i of the model is index i+1.
using DbmIndex = std::uint32_t;

// One constraint edge x - y ≺ c in DBM coordinates.
struct ClockConstraint {
  DbmIndex x;
  DbmIndex y;
  Bound bound;
};

// ── Zone ─────────────────────────────────────────────────────────────────────
// A zone over `dim` clocks, stored as a (dim+1)x(dim+1) difference bound
// matrix over the clocks plus the reference clock 0. Nonempty zones are kept
// in canonical (all-pairs tight) form, so structural equality of the matrix
// coincides with equality of the denoted valuation sets, and the matrix bytes
// can be hashed directly. The empty zone is a single distinguished value per
// dimension. Zones are immutable values: every operation returns a new zone.

class Zone {
public:
  // The canonical zone of all valuations reachable by delay from the
  // all-zeros valuation: all clocks equal and >= 0.
  static Zone initial(std::uint32_t dim);

  // All nonnegative valuations.
  static Zone universe(std::uint32_t dim);

  static Zone empty(std::uint32_t dim);

  // Canonicalize an arbitrary matrix of (dim+1)^2 bounds, row-major.
  // Clamps row 0 to nonnegative-clock form, runs all-pairs tightening and
  // collapses to the empty zone when a negative cycle exists.
  static Zone from_matrix(std::uint32_t dim, std::vector<Bound> m);

  std::uint32_t dim() const { return dim_; }
  bool is_empty() const { return empty_; }

  // Entry (i,j) bounds v_i - v_j. Meaningless on empty zones.
  Bound at(DbmIndex i, DbmIndex j) const { return m_[i * (dim_ + 1) + j]; }

  // Delay closure: upper bounds m[i][0] are dropped, everything else kept.
  Zone elapsed() const;

  // Conjoin the constraints and re-tighten; may yield the empty zone.
  Zone constrained(std::span<const ClockConstraint> constraints) const;

  // Set the given clocks (model clock ids, 0-based) to zero.
  Zone reset(std::span<const std::uint32_t> clocks) const;

  // Plain set inclusion: does this zone contain every valuation of `other`?
  bool includes(const Zone& other) const;

  bool operator==(const Zone& other) const;
  bool operator!=(const Zone& other) const { return !(*this == other); }

  std::size_t hash() const;

  std::string to_string(std::span<const std::string> clock_names = {}) const;

private:
  Zone(std::uint32_t dim, bool empty) : dim_(dim), empty_(empty) {}

  Bound& entry(DbmIndex i, DbmIndex j) { return m_[i * (dim_ + 1) + j]; }
  // Tighten all pairs through the updated edge (x,y); returns false when the
  // zone became empty.
  bool tighten_edge(DbmIndex x, DbmIndex y);
  void close_all();

  std::uint32_t dim_;
  bool empty_;
  std::vector<Bound> m_;
};

// Z' = elapsed(reset(constraints ∩ Z)); empty iff the intersection is empty.
Zone zone_successor(const Zone& z, std::span<const ClockConstraint> guard,
                    std::span<const std::uint32_t> resets);

// Zone-level LU preorder: every v in z1 is LU-dominated by some v' in z2,
// where v ≼ v' iff for every clock x, v'(x) < v(x) implies v'(x) > L(x) and
// v'(x) > v(x) implies v(x) > U(x). Quadratic entrywise test on the DBMs.
bool lu_le(const Zone& z1, const Zone& z2, const LuBounds& lu);

// Two-way LU preorder.
bool lu_equiv(const Zone& z1, const Zone& z2, const LuBounds& lu);

struct ZoneHash {
  std::size_t operator()(const Zone& z) const { return z.hash(); }
};

}  // namespace pdta

#endif  // PDTA_ZONE_HPP
