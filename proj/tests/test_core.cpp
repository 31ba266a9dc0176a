#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

#include "cofinite/algebra.hpp"
#include "cofinite/random.hpp"

using namespace cofinite;

TEST_CASE("validate: invariant violations") {
  CHECK_ERROR(validate({{1, 3}}, 2, 1), RangeCollision);
  CHECK_ERROR(validate({{1, 2}, {2, 2}}, 3, 0), RangeCollision);
  CHECK_ERROR(validate({}, 2, -2), BadRay);
  CHECK_ERROR(validate({}, 0, 0), BadRay);
  CHECK_ERROR(validate({{3, 1}}, 3, 0), BadFront);
  CHECK_ERROR(validate({{1, 1}, {1, 2}}, 3, 0), BadFront);
  CHECK_ERROR(validate({{0, 1}}, 3, 0), BadFront);
  CHECK_ERROR(validate({{1, 0}}, 3, 0), BadFront);
}

TEST_CASE("validate: accepted values") {
  CHECK(validate({}, 1, 0) == identity());

  // 1 -> 1, n -> n + 1 for n >= 2; injective on a window of 10.
  Element const e = validate({{1, 1}}, 2, 1);
  std::set<Int> images;
  for (Int n = 1; n <= 10; ++n) {
    REQUIRE(e(n).has_value());
    CHECK(images.insert(*e(n)).second);
  }

  // Unsorted input is stored sorted.
  Element const f = validate({{3, 1}, {1, 2}}, 4, 0);
  CHECK(f.front()[0] == FrontPair{1, 2});
  CHECK(f.front()[1] == FrontPair{3, 1});
}

TEST_CASE("canonicalize") {
  Element const raw = validate({{1, 1}, {2, 3}}, 3, 1);
  Element const c   = canonicalize(raw);
  CHECK(c == validate({{1, 1}}, 2, 1));
  CHECK(c.is_canonical());
  CHECK_FALSE(raw.is_canonical());
  for (Int n = 1; n <= 10; ++n) {
    CHECK(c(n) == raw(n));
  }

  Element const gap = validate({}, 5, 0);
  CHECK(canonicalize(gap) == gap);

  Element const gen = canonicalize(validate({{1, 2}, {2, 3}, {3, 4}}, 4, 1));
  CHECK(gen == generator_a());
  CHECK(gen.tail_start() == 1);
  CHECK(gen.front().empty());
}

TEST_CASE("canonicalize: idempotent and pointwise faithful") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    // Pad a random element with extra ray points in the front.
    Element const e    = random_element(Flavor::ALMON, rng);
    Int const     pad  = uniform(rng, 0, 4);
    std::vector<FrontPair> front(e.front().begin(), e.front().end());
    for (Int n = e.tail_start(); n < e.tail_start() + pad; ++n) {
      front.push_back({n, n + e.shift()});
    }
    Element const raw = validate(front, e.tail_start() + pad, e.shift());
    Element const c   = canonicalize(raw);
    CHECK(c == e);
    CHECK(canonicalize(c) == c);
    Int const bound = 2 * (raw.tail_start() + std::abs(raw.shift()));
    for (Int n = 1; n <= bound; ++n) {
      CHECK(c(n) == raw(n));
    }
  }
}

TEST_CASE("apply") {
  CHECK(apply(generator_a(), 5) == 6);
  CHECK_FALSE(apply(generator_b(), 1).has_value());
  CHECK(apply(generator_b(), 2) == 1);
  CHECK(apply(identity(), 7) == 7);
  CHECK_FALSE(apply(identity(), 0).has_value());
}

TEST_CASE("support_summary") {
  CHECK(support_summary(identity()) == SupportSummary{{}, {}, 0, 1});
  CHECK(support_summary(generator_b()) == SupportSummary{{1}, {}, -1, 2});
  CHECK(support_summary(validate({{2, 1}}, 3, 0)) == SupportSummary{{1}, {2}, 0, 3});
}

TEST_CASE("truncate") {
  CHECK(truncate(generator_a(), 3).entries() == std::map<Int, Int>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(truncate(epsilon(1), 3).entries() == std::map<Int, Int>{{2, 2}, {3, 3}});
  CHECK(truncate(validate({{2, 1}}, 3, 0), 4).entries()
        == std::map<Int, Int>{{2, 1}, {3, 3}, {4, 4}});
  CHECK_ERROR(truncate(validate({{2, 1}}, 3, 0), 2), WindowTooSmall);
}

TEST_CASE("oracle_compose") {
  auto const ab = oracle_compose(truncate(generator_a(), 5), truncate(generator_b(), 5));
  CHECK(ab.restricted(3) == truncate(identity(), 5).restricted(3));

  auto const ba = oracle_compose(truncate(generator_b(), 5), truncate(generator_a(), 5));
  CHECK(ba.restricted(3) == truncate(epsilon(1), 5).restricted(3));

  auto const t = truncate(validate({{2, 1}}, 3, 0), 6);
  CHECK(oracle_compose(t, truncate(identity(), 6)) == t);

  CHECK_ERROR(oracle_compose(truncate(identity(), 4), truncate(identity(), 5)),
              WindowMismatch);
}

TEST_CASE("structural equality matches truncation equality") {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Element const x = random_element(Flavor::ALMON, rng, {4, 2});
    Element const y = random_element(Flavor::ALMON, rng, {4, 2});
    Int const m = std::max(x.tail_start(), y.tail_start())
                  + std::max(std::abs(x.shift()), std::abs(y.shift())) + 8;
    CHECK((x == y) == (truncate(x, m) == truncate(y, m)));
  }
}

TEST_CASE("canonical elements are almost monotone") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Element const e = random_element(Flavor::ALMON, rng);
    Int           prev = 0;
    for (Int n = e.tail_start(); n < e.tail_start() + 20; ++n) {
      CHECK(*e(n) > prev);
      prev = *e(n);
    }
  }
}

TEST_CASE("checked arithmetic") {
  Int const big = std::numeric_limits<Int>::max();
  CHECK_ERROR(checked_add(big, 1), Overflow);
  CHECK_ERROR(checked_sub(-big, 2), Overflow);
  CHECK_ERROR(apply(validate({}, 1, big), 2), Overflow);
}

TEST_CASE("flavor names and containment") {
  for (auto fl : all_flavors) {
    CHECK(parse_flavor(to_string(fl)) == fl);
    CHECK(contained_in(Flavor::CN, fl));
    CHECK(contained_in(fl, Flavor::ALMON));
  }
  CHECK_FALSE(parse_flavor("bogus").has_value());
  CHECK(contained_in(Flavor::ISO, Flavor::MON));
  CHECK(contained_in(Flavor::ISO1, Flavor::MON));
  CHECK_FALSE(contained_in(Flavor::ISO, Flavor::ISO1));
  CHECK_FALSE(contained_in(Flavor::ISO1, Flavor::ISO));
  CHECK_FALSE(contained_in(Flavor::MON, Flavor::ISO));
}
