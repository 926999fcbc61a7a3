/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#include "pdta/zone.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace pdta {

std::string Bound::to_string() const {
  if (is_infinity()) return "inf";
  return (is_strict() ? "<" : "<=") + std::to_string(value());
}

Zone Zone::initial(std::uint32_t dim) {
  Zone z = universe(dim);
  // Universe has row 0 at (<=,0) and uppers at infinity; pinning the
  // diagonal differences to 0 yields "all clocks equal".
  for (DbmIndex i = 1; i <= dim; ++i)
    for (DbmIndex j = 1; j <= dim; ++j)
      if (i != j) z.entry(i, j) = Bound::zero();
  return z;
}

Zone Zone::universe(std::uint32_t dim) {
  Zone z(dim, false);
  z.m_.assign(static_cast<std::size_t>(dim + 1) * (dim + 1), Bound::infinity());
  for (DbmIndex i = 0; i <= dim; ++i) z.entry(i, i) = Bound::zero();
  for (DbmIndex j = 0; j <= dim; ++j) z.entry(0, j) = Bound::zero();
  return z;
}

Zone Zone::empty(std::uint32_t dim) { return Zone(dim, true); }

Zone Zone::from_matrix(std::uint32_t dim, std::vector<Bound> m) {
  if (m.size() != static_cast<std::size_t>(dim + 1) * (dim + 1))
    throw std::invalid_argument("zone matrix has wrong size");
  Zone z(dim, false);
  z.m_ = std::move(m);
  // Clock valuations are nonnegative: 0 - x <= 0.
  for (DbmIndex j = 0; j <= dim; ++j)
    if (z.entry(0, j) > Bound::zero()) z.entry(0, j) = Bound::zero();
  z.close_all();
  return z;
}

void Zone::close_all() {
  const DbmIndex n = dim_ + 1;
  for (DbmIndex k = 0; k < n; ++k)
    for (DbmIndex i = 0; i < n; ++i) {
      const Bound ik = entry(i, k);
      if (ik.is_infinity()) continue;
      for (DbmIndex j = 0; j < n; ++j) {
        const Bound alt = ik + entry(k, j);
        if (alt < entry(i, j)) entry(i, j) = alt;
      }
    }
  for (DbmIndex i = 0; i < n; ++i)
    if (entry(i, i) < Bound::zero()) {
      empty_ = true;
      m_.clear();
      return;
    }
}

Zone Zone::elapsed() const {
  assert(!empty_);
  Zone z = *this;
  for (DbmIndex i = 1; i <= dim_; ++i) z.entry(i, 0) = Bound::infinity();
  return z;
}

bool Zone::tighten_edge(DbmIndex x, DbmIndex y) {
  const DbmIndex n = dim_ + 1;
  const Bound b = entry(x, y);
  if (entry(y, x) + b < Bound::zero()) return false;
  for (DbmIndex i = 0; i < n; ++i) {
    const Bound ix = entry(i, x);
    if (ix.is_infinity()) continue;
    const Bound ixy = ix + b;
    if (ixy.is_infinity()) continue;
    for (DbmIndex j = 0; j < n; ++j) {
      const Bound alt = ixy + entry(y, j);
      if (alt < entry(i, j)) entry(i, j) = alt;
    }
  }
  return true;
}

Zone Zone::constrained(std::span<const ClockConstraint> constraints) const {
  if (empty_) return *this;
  Zone z = *this;
  for (const ClockConstraint& c : constraints) {
    assert(c.x <= dim_ && c.y <= dim_);
    if (c.bound < z.entry(c.x, c.y)) {
      z.entry(c.x, c.y) = c.bound;
      if (!z.tighten_edge(c.x, c.y)) return Zone::empty(dim_);
    }
  }
  return z;
}

Zone Zone::reset(std::span<const std::uint32_t> clocks) const {
  assert(!empty_);
  Zone z = *this;
  for (std::uint32_t clock : clocks) {
    const DbmIndex x = clock + 1;
    assert(x <= dim_);
    for (DbmIndex j = 0; j <= dim_; ++j) {
      z.entry(x, j) = z.entry(0, j);
      z.entry(j, x) = z.entry(j, 0);
    }
    z.entry(x, x) = Bound::zero();
  }
  return z;
}

bool Zone::includes(const Zone& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("zone dimension mismatch");
  if (other.empty_) return true;
  if (empty_) return false;
  for (std::size_t k = 0; k < m_.size(); ++k)
    if (other.m_[k] > m_[k]) return false;
  return true;
}

bool Zone::operator==(const Zone& other) const {
  if (dim_ != other.dim_) return false;
  if (empty_ || other.empty_) return empty_ == other.empty_;
  return m_ == other.m_;
}

std::size_t Zone::hash() const {
  // FNV-1a over the raw bound encodings; canonical form makes this sound.
  std::uint64_t h = 1469598103934665603ull;
  h = (h ^ dim_) * 1099511628211ull;
  h = (h ^ (empty_ ? 1 : 0)) * 1099511628211ull;
  for (const Bound& b : m_) {
    std::uint64_t v = static_cast<std::uint64_t>(b.raw());
    h = (h ^ (v & 0xffffffffu)) * 1099511628211ull;
    h = (h ^ (v >> 32)) * 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string Zone::to_string(std::span<const std::string> clock_names) const {
  if (empty_) return "(empty)";
  auto name = [&](DbmIndex i) -> std::string {
    if (i == 0) return "0";
    if (i - 1 < clock_names.size()) return clock_names[i - 1];
    return "x" + std::to_string(i);
  };
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (DbmIndex i = 0; i <= dim_; ++i)
    for (DbmIndex j = 0; j <= dim_; ++j) {
      if (i == j || at(i, j).is_infinity()) continue;
      if (i == 0 && at(i, j) == Bound::zero()) continue;  // implicit x >= 0
      if (!first) out << " & ";
      first = false;
      out << name(i);
      if (j != 0) out << "-" << name(j);
      out << at(i, j).to_string();
    }
  if (first) out << "true";
  out << ")";
  return out.str();
}

Zone zone_successor(const Zone& z, std::span<const ClockConstraint> guard,
                    std::span<const std::uint32_t> resets) {
  Zone g = z.constrained(guard);
  if (g.is_empty()) return g;
  return g.reset(resets).elapsed();
}

namespace {

// L/U as bounds usable in cycle arithmetic; LuBounds::kNone maps to the
// -infinity constant, which makes the corresponding case unreachable.
constexpr std::int64_t kNoBound = LuBounds::kNone;

inline std::int64_t lu_at(const std::vector<std::int64_t>& v, DbmIndex i) {
  return i == 0 ? 0 : v[i - 1];  // reference clock behaves as L = U = 0
}

inline bool cycle_nonneg(Bound sum) { return sum >= Bound::zero(); }

}  // namespace

bool lu_le(const Zone& z1, const Zone& z2, const LuBounds& lu) {
  if (z1.dim() != z2.dim())
    throw std::invalid_argument("zone dimension mismatch");
  if (lu.clock_count() != z1.dim())
    throw std::invalid_argument("LU bounds dimension mismatch");
  if (z1.is_empty()) return true;
  if (z2.is_empty()) return false;

  // Z1 is not LU-dominated by Z2 exactly when for some pair (x,y) a witness
  // v in Z1 exists whose domination box is disjoint from Z2 through the
  // bound Z2[x][y]. The two cases split on whether v(x) <= L(x); each case
  // is a constant number of negative-cycle checks against canonical Z1.
  const DbmIndex n = z1.dim() + 1;
  for (DbmIndex x = 0; x < n; ++x) {
    const std::int64_t lx = lu_at(lu.lower, x);
    for (DbmIndex y = 0; y < n; ++y) {
      if (x == y) continue;
      const Bound zxy = z2.at(x, y);
      if (zxy.is_infinity()) continue;
      const std::int64_t uy = lu_at(lu.upper, y);
      if (uy == kNoBound) continue;  // no upper side, no violation via y

      if (lx != kNoBound) {
        // Case v(x) <= L(x): box demands v'(x) >= v(x), v'(y) <= v(y).
        const Bound diag = zxy.negated();
        if (cycle_nonneg(z1.at(0, x) + Bound::weak(lx)) &&
            cycle_nonneg(z1.at(0, y) + Bound::weak(uy)) &&
            cycle_nonneg(z1.at(x, y) + diag) &&
            cycle_nonneg(diag + Bound::weak(lx) + z1.at(0, y)))
          return false;
        // Case v(x) > L(x): box demands v'(x) > L(x), v'(y) <= v(y),
        // and the violation forces v(y) <= L(x) - c.
        const std::int64_t m = std::min(uy, lx - zxy.value());
        const Bound mb = Bound::weak(m);
        const Bound lxs = Bound::strict(-lx);
        if (cycle_nonneg(z1.at(x, 0) + lxs) && cycle_nonneg(mb + z1.at(0, y)) &&
            cycle_nonneg(lxs + z1.at(x, y) + mb))
          return false;
      }
      // lx == kNoBound: the box never constrains v'(x) from below, so no
      // violation can involve x on the lower side.
    }
  }
  return true;
}

bool lu_equiv(const Zone& z1, const Zone& z2, const LuBounds& lu) {
  return lu_le(z1, z2, lu) && lu_le(z2, z1, lu);
}

}  // namespace pdta
