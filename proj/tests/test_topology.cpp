#include <set>

#include "helpers.hpp"

#include "cofinite/algebra.hpp"
#include "cofinite/random.hpp"
#include "cofinite/topology.hpp"

using namespace cofinite;

namespace {
  // Pointwise reading of the neighbourhood definition on a window past both rays.
  bool contains_pointwise(BasicNbhd const& u, Element const& b) {
    Int const w = std::max(u.center().tail_start(), b.tail_start()) + 2;
    for (Int n = 1; n <= w; ++n) {
      if (b.in_domain(n) && !u.center().in_domain(n)) {
        return false;
      }
    }
    for (Int x : u.anchors()) {
      auto const y = apply(b, x);
      if (!y || *y != *apply(u.center(), x)) {
        return false;
      }
    }
    return true;
  }

  std::set<Int> random_anchors(Element const& center, Rng& rng, Int max_count) {
    std::set<Int> anchors;
    Int const     count = uniform(rng, 0, max_count);
    for (Int i = 0; i < 20 && static_cast<Int>(anchors.size()) < count; ++i) {
      Int const x = uniform(rng, 1, center.tail_start() + 3);
      if (center.in_domain(x)) {
        anchors.insert(x);
      }
    }
    return anchors;
  }
}  // namespace

TEST_CASE("BasicNbhd rejects anchors outside the domain") {
  CHECK_ERROR(BasicNbhd(epsilon(1), {1}), InvalidNbhd);
  CHECK_ERROR(BasicNbhd(identity(), {0}), InvalidNbhd);
  CHECK_NOTHROW(BasicNbhd(epsilon(1), {2, 7}));
}

TEST_CASE("nbhd_contains: worked examples") {
  BasicNbhd const u(identity(), {1});
  CHECK_FALSE(nbhd_contains(u, epsilon(1)));
  CHECK(nbhd_contains(u, make_idempotent({2})));

  BasicNbhd const v(generator_a(), {3});
  Element const   restricted = compose(epsilon(1), generator_a());
  CHECK(restricted == make_element({}, 2, 1));
  CHECK(nbhd_contains(v, restricted));
  CHECK_FALSE(nbhd_contains(v, identity()));
  // Larger domain than the center.
  CHECK_FALSE(nbhd_contains(BasicNbhd(epsilon(1), {}), identity()));
}

TEST_CASE("nbhd_contains agrees with a pointwise reading") {
  Rng rng(51);
  for (int trial = 0; trial < 3000; ++trial) {
    Element const   center = random_element(Flavor::ALMON, rng);
    BasicNbhd const u(center, random_anchors(center, rng, 2));
    Element const   b = trial % 2 == 0 ? random_element(Flavor::ALMON, rng)
                                       : compose(random_idempotent(rng), center);
    CHECK(nbhd_contains(u, b) == contains_pointwise(u, b));
  }
}

TEST_CASE("neighbourhoods: centre membership and filter property") {
  Rng rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    Element const center = random_element(all_flavors[trial % 5], rng);
    auto const    small  = random_anchors(center, rng, 2);
    auto          large  = small;
    for (Int x : random_anchors(center, rng, 2)) {
      large.insert(x);
    }
    BasicNbhd const u_small(center, small);
    BasicNbhd const u_large(center, large);
    CHECK(nbhd_contains(u_small, center));
    CHECK(nbhd_contains(u_large, center));
    for (int k = 0; k < 5; ++k) {
      Element const b = sample_nbhd_member(u_large, Flavor::ALMON, rng(), 3);
      CHECK(nbhd_contains(u_large, b));
      CHECK(nbhd_contains(u_small, b));
    }
  }
}

TEST_CASE("sample_nbhd_member: worked examples") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    BasicNbhd const u(generator_a(), {2});
    Element const   b = sample_nbhd_member(u, Flavor::ISO, seed, 3);
    CHECK(nbhd_contains(u, b));
    CHECK(b.in_domain(2));
    CHECK(compose(make_idempotent({}), b) == b);
    // A restriction of the centre.
    CHECK(compose(compose(b, invert(b)), generator_a()) == b);

    BasicNbhd const v(identity(), {});
    Element const   c = sample_nbhd_member(v, Flavor::ISO, seed, 2);
    CHECK(nbhd_contains(v, c));
    CHECK(member(Flavor::ISO, c));

    BasicNbhd const w(epsilon(1), {3});
    Element const   d = sample_nbhd_member(w, Flavor::ISO, seed, 3);
    CHECK(nbhd_contains(w, d));
    CHECK(apply(d, 3) == 3);
    CHECK(is_idempotent(d));
  }
  CHECK(sample_nbhd_member(BasicNbhd(generator_a(), {2}), Flavor::ALMON, 7, 3)
        == sample_nbhd_member(BasicNbhd(generator_a(), {2}), Flavor::ALMON, 7, 3));
}

TEST_CASE("sample_nbhd_member: flavor membership and errors") {
  Rng rng(53);
  for (int trial = 0; trial < 2000; ++trial) {
    Flavor const    fl     = all_flavors[trial % 5];
    Element const   center = random_element(fl, rng);
    BasicNbhd const u(center, random_anchors(center, rng, 2));
    Element b;
    try {
      b = sample_nbhd_member(u, fl, rng(), 3);
    } catch (Error const& e) {
      // Only CN with anchors can be pinned down to nothing but the centre.
      CHECK(e.kind() == ErrorKind::Unsatisfiable);
      CHECK(fl == Flavor::CN);
      continue;
    }
    CHECK(member(fl, b));
    CHECK(nbhd_contains(u, b));
  }
  CHECK_ERROR(sample_nbhd_member(BasicNbhd(epsilon(2), {}), Flavor::CN, 1, 1), NotMember);
}

TEST_CASE("ISO members of an anchored neighbourhood are restrictions of the centre") {
  Rng rng(54);
  int samples = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Element const center  = random_element(Flavor::ISO, rng);
    auto          anchors = random_anchors(center, rng, 2);
    if (anchors.empty()) {
      continue;
    }
    BasicNbhd const u(center, anchors);
    for (int k = 0; k < 5; ++k) {
      Element const b = sample_nbhd_member(u, Flavor::ISO, rng(), 4);
      CHECK(compose(compose(b, invert(b)), center) == b);
      ++samples;
    }
    // Any ISO element in u, not just sampled ones: shifts of the centre fail.
    Element const shifted = compose(center, generator_a());
    CHECK_FALSE(nbhd_contains(u, shifted));
  }
  CHECK(samples > 1000);
}

TEST_CASE("prop35_data") {
  auto const d1 = prop35_data(generator_a(), generator_b(), {1, 5});
  CHECK(d1.image_anchors == std::set<Int>{2, 6});
  CHECK(d1.product == identity());

  auto const d2 = prop35_data(identity(), identity(), {3});
  CHECK(d2.image_anchors == std::set<Int>{3});
  CHECK(d2.product == identity());

  auto const d3 = prop35_data(generator_b(), generator_a(), {2});
  CHECK(d3.image_anchors == std::set<Int>{1});
  CHECK(d3.product == epsilon(1));

  CHECK_ERROR(prop35_data(generator_b(), generator_a(), {1}), AnchorOutsideDomain);
  CHECK_ERROR(prop35_data(identity(), identity(), {}), BadArguments);
}

TEST_CASE("check_product_containment") {
  auto const r1 = check_product_containment(generator_a(), generator_b(), {1}, 200, 1);
  CHECK(r1.samples == 200);
  CHECK(r1.violations.empty());
  CHECK(check_product_containment(identity(), identity(), {1}, 200, 2).violations.empty());
  auto const r3 = check_product_containment(generator_b(), generator_a(), {2}, 200, 3);
  CHECK(r3.violations.empty());

  CHECK_ERROR(check_product_containment(generator_a(), generator_b(), {}, 10, 1), BadArguments);
  CHECK_ERROR(check_product_containment(make_element({{1, 1}}, 2, 1), identity(), {1}, 10, 1),
              NotMember);

  Rng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    Element const a = random_element(Flavor::ISO, rng);
    Element const b = random_element(Flavor::ISO, rng);
    Element const g = compose(a, b);
    auto const    f = random_anchors(g, rng, 2);
    if (f.empty()) {
      continue;
    }
    CHECK(check_product_containment(a, b, f, 50, rng()).violations.empty());
  }
}

TEST_CASE("without anchors the product containment can fail") {
  // A shifted member of U_a({}) times b leaves dom ab.
  Element const a  = identity();
  Element const b  = epsilon(1);
  Element const a2 = generator_a();
  CHECK(nbhd_contains(BasicNbhd(a, {}), a2));
  Element const product = compose(a2, b);
  CHECK_FALSE(nbhd_contains(BasicNbhd(compose(a, b), {}), product));
}
