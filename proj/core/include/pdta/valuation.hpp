/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_VALUATION_HPP
#define PDTA_VALUATION_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pdta/bounds.hpp"
#include "pdta/zone.hpp"

namespace pdta {

// Exact nonnegative rational, just enough for the test and oracle helpers
// that sample concrete valuations. Magnitudes stay tiny there, so plain
// 64-bit cross multiplication is safe.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("nonpositive denominator");
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
};

// A clock valuation with exact rational components; all components >= 0.
using Valuation = std::vector<Rational>;

// Does the difference d satisfy the bound?
inline bool satisfies(const Rational& d, Bound b) {
  if (b.is_infinity()) return true;
  const Rational c(b.value());
  return b.is_strict() ? d < c : d <= c;
}

// Membership of a valuation in a zone, checked entry by entry.
inline bool zone_contains(const Zone& z, const Valuation& v) {
  if (z.is_empty()) return false;
  if (v.size() != z.dim()) throw std::invalid_argument("valuation dimension mismatch");
  auto value = [&](DbmIndex i) { return i == 0 ? Rational(0) : v[i - 1]; };
  for (DbmIndex i = 0; i <= z.dim(); ++i)
    for (DbmIndex j = 0; j <= z.dim(); ++j)
      if (i != j && !satisfies(value(i) - value(j), z.at(i, j))) return false;
  return true;
}

// The valuation-level LU preorder: v is dominated by w iff for every clock,
// w(x) < v(x) implies w(x) > L(x) and w(x) > v(x) implies v(x) > U(x).
// A missing bound behaves as -infinity, which any value exceeds.
inline bool lu_dominates(const Valuation& v, const Valuation& w, const LuBounds& lu) {
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (w[x] < v[x]) {
      if (lu.lower[x] != LuBounds::kNone && !(w[x] > Rational(lu.lower[x])))
        return false;
    } else if (w[x] > v[x]) {
      if (lu.upper[x] != LuBounds::kNone && !(v[x] > Rational(lu.upper[x])))
        return false;
    }
  }
  return true;
}

}  // namespace pdta

#endif  // PDTA_VALUATION_HPP
