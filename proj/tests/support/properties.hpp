/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_TESTS_PROPERTIES_HPP
#define PDTA_TESTS_PROPERTIES_HPP

// The randomized property suites shared between the doctest wrappers and
// the acceptance runner. Each returns the number of failing cases; the
// oracles here are deliberately independent of the code paths they check
// (brute-force enumeration, entrywise recomputation).

#include <cstdint>

#include "pdta/model.hpp"
#include "pdta/valuation.hpp"
#include "pdta/zone.hpp"
#include "support/builders.hpp"

namespace pdta::test {

struct PropOutcome {
  int cases = 0;
  int failures = 0;
  int effective = 0;  // cases that exercised the interesting branch
};

// Canonical-form closure: outputs of from_matrix/elapsed/reset/constrained
// satisfy the exact triangle inequality, unit diagonal and nonneg row 0.
inline PropOutcome prop_canonical_closure(int cases, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed);
  auto canonical = [](const Zone& z) {
    if (z.is_empty()) return true;
    for (DbmIndex i = 0; i <= z.dim(); ++i) {
      if (z.at(i, i) != Bound::zero()) return false;
      if (z.at(0, i) > Bound::zero()) return false;
      for (DbmIndex j = 0; j <= z.dim(); ++j)
        for (DbmIndex k = 0; k <= z.dim(); ++k)
          if (z.at(i, k) + z.at(k, j) < z.at(i, j)) return false;
    }
    return true;
  };
  for (int n = 0; n < cases; ++n) {
    ++out.cases;
    const std::uint32_t dim = static_cast<std::uint32_t>(rng.uniform(1, 4));
    Zone z = Zone::from_matrix(dim, random_matrix(rng, dim, 8));
    bool ok = canonical(z);
    if (!z.is_empty()) {
      ++out.effective;
      ok = ok && canonical(z.elapsed());
      const auto resets = random_resets(rng, dim);
      ok = ok && canonical(z.reset(resets));
      const ClockId x = static_cast<ClockId>(rng.uniform(0, dim - 1));
      ok = ok && canonical(z.constrained({{c_le(x, rng.uniform(0, 8))}}));
    }
    if (!ok) ++out.failures;
  }
  return out;
}

// lu_le is reflexive; whenever two random comparisons chain, they compose.
inline PropOutcome prop_lu_reflexive_transitive(int cases, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed);
  for (int n = 0; n < cases; ++n) {
    ++out.cases;
    const std::uint32_t dim = static_cast<std::uint32_t>(rng.uniform(1, 3));
    const LuBounds lu = random_lu(rng, dim, 4);
    Zone a = random_zone(rng, dim, 4);
    bool ok = lu_le(a, a, lu);
    Zone b = random_zone(rng, dim, 4);
    Zone c = random_zone(rng, dim, 4);
    if (lu_le(a, b, lu) && lu_le(b, c, lu)) {
      ++out.effective;
      ok = ok && lu_le(a, c, lu);
    }
    if (!ok) ++out.failures;
  }
  return out;
}

// Plain inclusion implies LU domination for every bound choice.
inline PropOutcome prop_includes_implies_le(int cases, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed);
  for (int n = 0; n < cases; ++n) {
    ++out.cases;
    const std::uint32_t dim = static_cast<std::uint32_t>(rng.uniform(1, 3));
    Zone big = random_zone(rng, dim, 4);
    Zone small = big;
    const int extra = static_cast<int>(rng.uniform(1, 2));
    for (int i = 0; i < extra; ++i) {
      const ClockId x = static_cast<ClockId>(rng.uniform(0, dim - 1));
      small = rng.flip() ? small.constrained({{c_le(x, rng.uniform(0, 4))}})
                         : small.constrained({{c_ge(x, rng.uniform(0, 4))}});
    }
    if (small.is_empty()) continue;
    ++out.effective;
    if (!big.includes(small) || !lu_le(small, big, random_lu(rng, dim, 4)))
      ++out.failures;
  }
  return out;
}

// Domination transfers through guard/reset/elapse successors whenever the
// guard constants are covered by the bounds.
inline PropOutcome prop_transfer(int cases, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed);
  for (int n = 0; n < cases; ++n) {
    ++out.cases;
    const std::uint32_t dim = static_cast<std::uint32_t>(rng.uniform(1, 3));
    const LuBounds lu = random_lu(rng, dim, 4);
    Zone z1 = random_zone(rng, dim, 4);
    Zone z2 = random_zone(rng, dim, 4);
    if (!lu_le(z1, z2, lu)) continue;
    const Guard g = random_guard_covered(rng, dim, lu);
    const std::vector<ClockId> resets = random_resets(rng, dim);
    Zone s1 = successor(z1, g, resets);
    Zone s2 = successor(z2, g, resets);
    if (s1.is_empty()) continue;
    ++out.effective;
    if (s2.is_empty() || !lu_le(s1, s2, lu)) ++out.failures;
  }
  return out;
}

// Region-sampled brute-force domination check, fully independent of the
// pairwise lu_le formula: enumerate one representative per region of
// granularity above every constant, keep members of z1 and decide "some
// w in z2 dominates v" by conjoining the domination box with z2 on a
// scaled DBM.
inline bool brute_lu_le(const Zone& z1, const Zone& z2, const LuBounds& lu,
                        std::int64_t max_const) {
  if (z1.is_empty()) return true;
  if (z2.is_empty()) return false;
  const std::uint32_t dim = z1.dim();
  const std::int64_t scale = 4;  // fractions from {0, 1/4, 2/4, 3/4}
  const std::int64_t top = scale * (max_const + 1);

  std::vector<std::int64_t> g(dim, 0);
  for (;;) {
    Valuation v;
    for (std::int64_t gi : g) v.push_back(Rational(gi, scale));
    if (zone_contains(z1, v)) {
      const std::uint32_t n = dim + 1;
      std::vector<Bound> m;
      m.reserve(static_cast<std::size_t>(n) * n);
      for (DbmIndex i = 0; i < n; ++i)
        for (DbmIndex j = 0; j < n; ++j) {
          Bound b = z2.at(i, j);
          if (!b.is_infinity())
            b = b.is_strict() ? Bound::strict(b.value() * scale)
                              : Bound::weak(b.value() * scale);
          m.push_back(b);
        }
      auto tighten = [&](DbmIndex i, DbmIndex j, Bound b) {
        if (b < m[i * n + j]) m[i * n + j] = b;
      };
      for (ClockId x = 0; x < dim; ++x) {
        const std::int64_t vx = g[x];  // already scaled
        if (lu.lower[x] != LuBounds::kNone) {
          const std::int64_t lx = scale * lu.lower[x];
          if (vx <= lx)
            tighten(0, x + 1, Bound::weak(-vx));  // w(x) >= v(x)
          else
            tighten(0, x + 1, Bound::strict(-lx));  // w(x) > L(x)
        }
        if (lu.upper[x] != LuBounds::kNone && vx <= scale * lu.upper[x])
          tighten(x + 1, 0, Bound::weak(vx));  // w(x) <= v(x)
      }
      if (Zone::from_matrix(dim, std::move(m)).is_empty()) return false;
    }
    std::size_t k = 0;
    while (k < g.size() && g[k] == top) g[k++] = 0;
    if (k == g.size()) break;
    ++g[k];
  }
  return true;
}

inline PropOutcome prop_semantic_agreement(int cases, std::uint64_t seed) {
  PropOutcome out;
  Rng rng(seed);
  for (int n = 0; n < cases; ++n) {
    ++out.cases;
    // weight the dimensions so the dim-3 grid stays affordable
    const std::uint32_t dims[6] = {1, 1, 2, 2, 2, 3};
    const std::uint32_t dim = dims[rng.uniform(0, 5)];
    const LuBounds lu = random_lu(rng, dim, 4);
    Zone z1 = random_zone(rng, dim, 4);
    Zone z2 = random_zone(rng, dim, 4);
    ++out.effective;
    if (lu_le(z1, z2, lu) != brute_lu_le(z1, z2, lu, 4)) ++out.failures;
  }
  return out;
}

}  // namespace pdta::test

#endif  // PDTA_TESTS_PROPERTIES_HPP
