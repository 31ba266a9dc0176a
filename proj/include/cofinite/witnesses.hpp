// Constructive witnesses: simplicity factorizations, finite solution sets of
// one-sided equations, bounded H-class enumeration, factorizations of the
// identity.

#ifndef COFINITE_WITNESSES_HPP_
#define COFINITE_WITNESSES_HPP_

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cofinite/element.hpp"

namespace cofinite {

  struct SimplicityWitness {
    Element left;
    Element right;
  };

  // left = n -> n - 1 + n_d(b) on N, right = arrow(b)^-1 left^-1. Both lie in
  // CN and left * b * right is the identity.
  SimplicityWitness simplicity_witness(Flavor fl, Element const& b);

  struct SolutionSet {
    std::vector<Element>   solutions;
    // The forced restriction, absent when the equation is inconsistent.
    std::optional<Element> base;
    // Candidate extensions enumerated before the flavor filter.
    Int extension_count = 0;
  };

  // All x in the flavor with a * x = b.
  //
  // x is forced on ran a: it must equal a^-1 b there. Off ran a it may map
  // any subset of the finite set N \ ran a injectively into N \ ran b.
  // Candidates are listed by (subset, assignment) in lexicographic order.
  SolutionSet solve_left(Flavor fl, Element const& a, Element const& b);

  // All x in the flavor with x * a = b. Mirror image: forced part b a^-1,
  // extensions from N \ dom b into N \ dom a.
  SolutionSet solve_right(Flavor fl, Element const& a, Element const& b);

  // Upper bound on the number of solutions: sum_k C(m, k) P(n, k).
  Int extension_bound(Int free_points, Int free_values);

  // Canonical flavor members with the given missing sets and tail_start at
  // most `tail_bound`, in increasing order. The shift is forced to
  // |ran_missing| - |dom_missing|.
  std::vector<Element> h_class_members(Flavor               fl,
                                       std::set<Int> const& dom_missing,
                                       std::set<Int> const& ran_missing,
                                       Int                  tail_bound);

  // (a^i, b^i); every pair multiplies to the identity.
  std::pair<Element, Element> power_factorization(Int i);

  bool is_factorization(Element const& x, Element const& y, Element const& g);

}  // namespace cofinite

#endif  // COFINITE_WITNESSES_HPP_
