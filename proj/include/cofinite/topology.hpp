// Basic open neighbourhoods U_a(F) = { b : dom b in dom a, b = a on F } and
// sampled checks of the continuity containments for products and inversion.

#ifndef COFINITE_TOPOLOGY_HPP_
#define COFINITE_TOPOLOGY_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cofinite/element.hpp"

namespace cofinite {

  class BasicNbhd {
   public:
    // Throws InvalidNbhd unless every anchor lies in dom center.
    BasicNbhd(Element center, std::set<Int> anchors);

    Element const& center() const noexcept {
      return _center;
    }
    std::set<Int> const& anchors() const noexcept {
      return _anchors;
    }

   private:
    Element       _center;
    std::set<Int> _anchors;
  };

  bool nbhd_contains(BasicNbhd const& u, Element const& b);

  struct ProductNbhdData {
    std::set<Int> image_anchors;  // (F)a
    Element       product;        // ab
  };

  // U_a(F) * U_b((F)a) lies in U_ab(F). Requires F nonempty and inside
  // dom ab.
  ProductNbhdData prop35_data(Element const&       a,
                              Element const&       b,
                              std::set<Int> const& anchors);

  // A member of u that belongs to `fl`, deterministic in `seed`. Removes up
  // to `extra_removals` non-anchor domain points. With no anchors it may also
  // change the shift; for ALMON it may permute non-anchor front values.
  Element sample_nbhd_member(BasicNbhd const& u,
                             Flavor           fl,
                             std::uint64_t    seed,
                             Int              extra_removals);

  struct ContainmentViolation {
    std::string kind;  // "product" or "inversion"
    Element     first;
    Element     second;
    Element     result;
  };

  struct ContainmentReport {
    Int                               samples = 0;
    std::vector<ContainmentViolation> violations;
  };

  // Samples pairs (a', b') in U_a(F) x U_b((F)a) and checks a'b' in U_ab(F);
  // samples c' in U_ab(F) and checks c'^-1 in U_{(ab)^-1}((F)ab). Both
  // arguments must be isometries and F must be nonempty.
  ContainmentReport check_product_containment(Element const&       a,
                                              Element const&       b,
                                              std::set<Int> const& anchors,
                                              Int                  n_samples,
                                              std::uint64_t        seed);

}  // namespace cofinite

#endif  // COFINITE_TOPOLOGY_HPP_
