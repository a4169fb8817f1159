#pragma once

#include <random>

#include "ptorus/moebius.hpp"

namespace ptorus::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Complex random_complex(std::mt19937_64& g, double re_lo, double re_hi,
                              double im_lo, double im_hi) {
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(im_lo, im_hi);
  return {re(g), im(g)};
}

inline MoebiusMap random_moebius(std::mt19937_64& g) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    const Complex a{n(g), n(g)}, b{n(g), n(g)}, c{n(g), n(g)}, d{n(g), n(g)};
    if (std::abs(a * d - b * c) < 1e-3) continue;
    return MoebiusMap::from_entries(a, b, c, d);
  }
}

inline MoebiusMap random_loxodromic(std::mt19937_64& g) {
  std::uniform_real_distribution<double> mag(1.1, 3.0), arg(-3.0, 3.0);
  const Complex k = std::polar(mag(g), arg(g));
  const MoebiusMap conj = random_moebius(g);
  return compose(compose(conj, MoebiusMap::diagonal(k)), conj.inverse());
}

}  // namespace ptorus::testutil
