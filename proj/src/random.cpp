#include "cofinite/random.hpp"

#include <algorithm>
#include <set>

#include "cofinite/algebra.hpp"

namespace cofinite {

  Int uniform(Rng& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
  }

  namespace {
    bool coin(Rng& rng) {
      return uniform(rng, 0, 1) == 1;
    }

    std::pair<Int, Int> random_ray(Rng& rng, SampleParams const& params) {
      Int const tail  = uniform(rng, 1, std::max<Int>(1, params.max_tail));
      Int const shift = uniform(
          rng, std::max(1 - tail, -params.max_shift), params.max_shift);
      return {tail, shift};
    }

    Element random_isometry(Rng& rng, SampleParams const& params) {
      auto const [tail, shift] = random_ray(rng, params);
      std::vector<FrontPair> front;
      for (Int x = std::max<Int>(1, 1 - shift); x < tail; ++x) {
        if (coin(rng)) {
          front.push_back({x, x + shift});
        }
      }
      return make_element(std::move(front), tail, shift);
    }
  }  // namespace

  Element random_element(Flavor fl, Rng& rng, SampleParams const& params) {
    switch (fl) {
      case Flavor::CN: {
        auto const [tail, shift] = random_ray(rng, params);
        return make_element({}, tail, shift);
      }
      case Flavor::ISO: return random_isometry(rng, params);
      case Flavor::ISO1: {
        Element   e     = random_isometry(rng, params);
        Int const least = e.front().empty() ? e.tail_start() : e.front()[0].from;
        Int const image = *e(least);
        if (least == 1 || image == 1 || !coin(rng)) {
          return e;
        }
        std::vector<FrontPair> front(e.front().begin(), e.front().end());
        front.push_back({uniform(rng, 1, least - 1), uniform(rng, 1, image - 1)});
        return make_element(std::move(front), e.tail_start(), e.shift());
      }
      case Flavor::MON:
      case Flavor::ALMON: {
        auto const [tail, shift] = random_ray(rng, params);
        std::vector<Int> points;
        for (Int x = 1; x < tail; ++x) {
          if (coin(rng)) {
            points.push_back(x);
          }
        }
        std::vector<Int> values;
        for (Int y = 1; y < tail + shift; ++y) {
          values.push_back(y);
        }
        std::shuffle(points.begin(), points.end(), rng);
        std::shuffle(values.begin(), values.end(), rng);
        points.resize(std::min(points.size(), values.size()));
        values.resize(points.size());
        std::sort(points.begin(), points.end());
        if (fl == Flavor::MON) {
          std::sort(values.begin(), values.end());
        }
        std::vector<FrontPair> front;
        for (std::size_t i = 0; i < points.size(); ++i) {
          front.push_back({points[i], values[i]});
        }
        return make_element(std::move(front), tail, shift);
      }
    }
    return identity();
  }

  Element random_idempotent(Rng& rng, Int max_point) {
    std::set<Int> missing;
    for (Int n = 1; n <= max_point; ++n) {
      if (uniform(rng, 0, 2) == 0) {
        missing.insert(n);
      }
    }
    return make_idempotent(missing);
  }

}  // namespace cofinite
