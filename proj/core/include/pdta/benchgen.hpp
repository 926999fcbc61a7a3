/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_BENCHGEN_HPP
#define PDTA_BENCHGEN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdta/model.hpp"

namespace pdta {

// Parametric benchmark family. Edge declaration order follows the reference
// drawings left-to-right, top-to-bottom; the exact order is load-bearing for
// reproducible exploration statistics and is documented per generator in
// benchgen.cpp.
//
//   B1          fixed; 8 pushes, pop loop guarded y<=10 / x>=1
//   B2 k        push loop against a chain of k+1 pops
//   B3 k1 k2    nested pushes with pop windows x>=k1 / y<=k2
//   B4          fixed; single push-pop pair, three clocks
//   B5 k1 k2    k1 chained segments, pushes then pops, with wait loops
//   B6 k1 k2 k3 push phase y<=k1, pop phase y<k2, wait loop z2<=k3
//   B7          fixed; open-guard pushes, pop cycle b,a,a
//   B8          fixed; two sequential push-pop pairs, four clocks
//   B9 k1 k2    k1 four-push loops, one matching pop line
//   B10         fixed; open-guard pushes, pop cycle a,b
//   FIG3        fixed; the minimal model separating naive pruning from the
//               sound modes
std::vector<std::string> benchmark_names();

// Throws std::invalid_argument on unknown names, wrong arity or
// nonpositive parameters. Names are matched case-insensitively.
PdtaModel make_benchmark(const std::string& name, std::span<const std::int64_t> params);

// make_benchmark rendered in the model text format.
std::string generate_benchmark(const std::string& name,
                               std::span<const std::int64_t> params);

inline PdtaModel make_benchmark(const std::string& name,
                                std::initializer_list<std::int64_t> params) {
  return make_benchmark(name, std::span<const std::int64_t>(params.begin(), params.size()));
}
inline std::string generate_benchmark(const std::string& name,
                                      std::initializer_list<std::int64_t> params) {
  return generate_benchmark(name,
                            std::span<const std::int64_t>(params.begin(), params.size()));
}

}  // namespace pdta

#endif  // PDTA_BENCHGEN_HPP
