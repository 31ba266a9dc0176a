#include "cofinite/topology.hpp"

#include <algorithm>
#include <numeric>

#include "cofinite/algebra.hpp"
#include "cofinite/random.hpp"

namespace cofinite {

  BasicNbhd::BasicNbhd(Element center, std::set<Int> anchors)
      : _center(std::move(center)), _anchors(std::move(anchors)) {
    for (Int x : _anchors) {
      if (!_center.in_domain(x)) {
        throw Error(ErrorKind::InvalidNbhd,
                    "anchor " + std::to_string(x)
                        + " is outside the center's domain");
      }
    }
  }

  bool nbhd_contains(BasicNbhd const& u, Element const& b) {
    auto const outer = dom_missing(u.center());
    auto const inner = dom_missing(b);
    if (!std::includes(inner.begin(), inner.end(), outer.begin(), outer.end())) {
      return false;
    }
    return std::all_of(u.anchors().begin(), u.anchors().end(), [&](Int x) {
      return b(x) == u.center()(x);
    });
  }

  ProductNbhdData prop35_data(Element const&       a,
                              Element const&       b,
                              std::set<Int> const& anchors) {
    if (anchors.empty()) {
      throw Error(ErrorKind::BadArguments, "anchor set must be nonempty");
    }
    Element       product = compose(a, b);
    std::set<Int> image;
    for (Int x : anchors) {
      if (!product.in_domain(x)) {
        throw Error(ErrorKind::AnchorOutsideDomain,
                    "anchor " + std::to_string(x) + " is outside dom ab");
      }
      image.insert(*a(x));
    }
    return {std::move(image), std::move(product)};
  }

  namespace {
    Element restrict_domain(Element const& e, std::set<Int> const& removed) {
      return compose(make_idempotent(removed), e);
    }
  }  // namespace

  Element sample_nbhd_member(BasicNbhd const& u,
                             Flavor           fl,
                             std::uint64_t    seed,
                             Int              extra_removals) {
    Element const& center = u.center();
    if (!member(fl, center)) {
      throw Error(ErrorKind::NotMember, "center outside " + to_string(fl));
    }
    if (extra_removals < 0) {
      throw Error(ErrorKind::BadArguments, "extra_removals must be >= 0");
    }
    Rng rng(seed);

    Element result;
    if (fl == Flavor::CN) {
      // Front-free members of U: rays [n, inf) with n at most every anchor.
      Int const lo = center.tail_start();
      Int const hi = u.anchors().empty() ? lo + extra_removals
                                         : *u.anchors().begin();
      if (hi < lo) {
        throw Error(ErrorKind::Unsatisfiable, "no ray start fits the anchors");
      }
      Int const start = uniform(rng, lo, hi);
      Int       shift = center.shift();
      if (u.anchors().empty() && uniform(rng, 0, 1) == 1) {
        shift = uniform(rng, 1 - start, 3);
      }
      result = make_element({}, start, shift);
    } else {
      std::vector<Int> candidates;
      Int const        top = center.tail_start() + extra_removals + 2;
      for (Int n = 1; n <= top; ++n) {
        if (center.in_domain(n) && !u.anchors().contains(n)) {
          candidates.push_back(n);
        }
      }
      std::shuffle(candidates.begin(), candidates.end(), rng);
      auto const count = std::min<std::size_t>(
          candidates.size(), uniform(rng, 0, extra_removals));
      result = restrict_domain(
          center, std::set<Int>(candidates.begin(), candidates.begin() + count));

      if (u.anchors().empty() && uniform(rng, 0, 1) == 1) {
        // Any pure shift on a subdomain is an isometry.
        Int const shift  = uniform(rng, -3, 3);
        Int const start  = std::max<Int>(1, 1 - shift);
        auto const missing = dom_missing(result);
        result = compose(make_idempotent({missing.begin(), missing.end()}),
                         make_element({}, start, shift));
      } else if (fl == Flavor::ALMON && uniform(rng, 0, 1) == 1) {
        std::vector<FrontPair> front(result.front().begin(), result.front().end());
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < front.size(); ++i) {
          if (!u.anchors().contains(front[i].from)) {
            free.push_back(i);
          }
        }
        std::vector<Int> values;
        for (auto i : free) {
          values.push_back(front[i].to);
        }
        std::shuffle(values.begin(), values.end(), rng);
        for (std::size_t j = 0; j < free.size(); ++j) {
          front[free[j]].to = values[j];
        }
        result = make_element(std::move(front), result.tail_start(), result.shift());
      }
    }
    if (!nbhd_contains(u, result) || !member(fl, result)) {
      throw std::logic_error("sample_nbhd_member: sample left the neighbourhood");
    }
    return result;
  }

  ContainmentReport check_product_containment(Element const&       a,
                                              Element const&       b,
                                              std::set<Int> const& anchors,
                                              Int                  n_samples,
                                              std::uint64_t        seed) {
    if (!member(Flavor::ISO, a) || !member(Flavor::ISO, b)) {
      throw Error(ErrorKind::NotMember, "containment checks run inside iso");
    }
    if (n_samples < 0) {
      throw Error(ErrorKind::BadArguments, "sample count must be >= 0");
    }
    auto const [image, product] = prop35_data(a, b, anchors);
    BasicNbhd const ua(a, anchors);
    BasicNbhd const ub(b, image);
    BasicNbhd const ug(product, anchors);

    std::set<Int> product_image;
    for (Int x : anchors) {
      product_image.insert(*product(x));
    }
    BasicNbhd const ug_inv(invert(product), product_image);

    Rng               seeds(seed);
    ContainmentReport report;
    report.samples = n_samples;
    for (Int s = 0; s < n_samples; ++s) {
      Element const a1 = sample_nbhd_member(ua, Flavor::ISO, seeds(), 3);
      Element const b1 = sample_nbhd_member(ub, Flavor::ISO, seeds(), 3);
      Element const p  = compose(a1, b1);
      if (!nbhd_contains(ug, p)) {
        report.violations.push_back({"product", a1, b1, p});
      }
      Element const c1  = sample_nbhd_member(ug, Flavor::ISO, seeds(), 3);
      Element const inv = invert(c1);
      if (!nbhd_contains(ug_inv, inv)) {
        report.violations.push_back({"inversion", c1, product, inv});
      }
    }
    return report;
  }

}  // namespace cofinite
