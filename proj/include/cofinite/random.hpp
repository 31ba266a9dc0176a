// Random flavor members for sampling and property tests.

#ifndef COFINITE_RANDOM_HPP_
#define COFINITE_RANDOM_HPP_

#include <random>

#include "cofinite/element.hpp"

namespace cofinite {

  using Rng = std::mt19937_64;

  struct SampleParams {
    Int max_tail  = 6;
    Int max_shift = 3;
  };

  // A canonical member of `fl`. Every member with tail_start <= max_tail and
  // |shift| <= max_shift has positive probability.
  Element random_element(Flavor fl, Rng& rng, SampleParams const& params = {});

  // Identity of N minus a random subset of [1, max_point].
  Element random_idempotent(Rng& rng, Int max_point = 8);

  Int uniform(Rng& rng, Int lo, Int hi);

}  // namespace cofinite

#endif  // COFINITE_RANDOM_HPP_
