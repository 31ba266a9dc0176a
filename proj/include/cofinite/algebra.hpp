// Semigroup arithmetic, named elements, submonoid membership and Green's
// relations.

#ifndef COFINITE_ALGEBRA_HPP_
#define COFINITE_ALGEBRA_HPP_

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cofinite/element.hpp"

namespace cofinite {

  // Left-to-right composition: n(ab) = (na)b.
  Element compose(Element const& a, Element const& b);
  Element invert(Element const& a);

  inline Element operator*(Element const& a, Element const& b) {
    return compose(a, b);
  }

  Element identity();
  // n -> n + 1 on N.
  Element generator_a();
  // n -> n - 1 on N \ {1}.
  Element generator_b();

  // Identity map of N \ missing.
  Element make_idempotent(std::set<Int> const& missing);
  // Identity map of N \ {i}.
  Element epsilon(Int i);
  // Identity map of [n, inf).
  Element ray_idempotent(Int n);

  bool is_idempotent(Element const& a);

  // [epsilon(n1), ..., epsilon(nk)] for the missing points n1 < ... < nk.
  std::vector<Element> idempotent_factorization(Element const& e);

  // Natural partial order on idempotents: e <= f iff dom e is inside dom f.
  bool natural_leq(Element const& e, Element const& f);

  bool member(Flavor fl, Element const& a);

  struct Thresholds {
    Int                n_d;      // least ray start
    Int                n_under;  // least domain point
    std::optional<Int> n_over;   // greatest domain point below n_d

    bool operator==(Thresholds const&) const = default;
  };

  Thresholds thresholds(Element const& a);

  // The ray part a|[n_d, inf); always in CN.
  Element arrow(Element const& a);

  // b^i a^j in the bicyclic normal form: tail i + 1, shift j - i.
  Element                cn_element(Int i, Int j);
  std::pair<Int, Int>    cn_decompose(Element const& a);

  struct GreenReport {
    bool r_related;
    bool l_related;
    bool h_related;
    // nullopt when undecided (ISO1).
    std::optional<bool> d_related;

    bool operator==(GreenReport const&) const = default;
  };

  // J is universal in every flavor (all five are simple) and is not reported.
  //
  // For ISO, idempotents e and f are D-related iff some pure shift maps
  // dom e bijectively onto dom f. The shift is forced by counting missing
  // points, so the test is a single translation check.
  GreenReport green(Flavor fl, Element const& a, Element const& b);

}  // namespace cofinite

#endif  // COFINITE_ALGEBRA_HPP_
