// The shift homomorphism onto (Z, +), the least group congruence and the
// classification of finitely generated congruences.

#ifndef COFINITE_CONGRUENCE_HPP_
#define COFINITE_CONGRUENCE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "cofinite/element.hpp"

namespace cofinite {

  // Eventual displacement of a. A surjective homomorphism onto (Z, +) whose
  // kernel is the least group congruence.
  Int shift_index(Element const& a);

  bool cmg_related(Element const& a, Element const& b);

  // Ray idempotent e with ae = be. The ray start is the least N at which
  // both products are front-free and equal:
  //   N = max(1, tail_a + k, tail_b + k, 1 + every front value of a and b).
  // Throws NotRelated when the shifts differ.
  Element cmg_witness(Element const& a, Element const& b);

  class CongruenceClass {
   public:
    enum class Kind { Identity, Group };

    static CongruenceClass identity() {
      return CongruenceClass(Kind::Identity, std::nullopt);
    }
    // Preimage of dZ under the shift homomorphism. Group(0) is the least group
    // congruence, Group(1) the universal one.
    static CongruenceClass group(Int modulus);

    Kind kind() const noexcept {
      return _kind;
    }
    std::optional<Int> modulus() const noexcept {
      return _modulus;
    }

    bool operator==(CongruenceClass const&) const = default;

   private:
    CongruenceClass(Kind kind, std::optional<Int> modulus)
        : _kind(kind), _modulus(modulus) {}

    Kind               _kind;
    std::optional<Int> _modulus;
  };

  using ElementPair = std::pair<Element, Element>;

  // Congruence generated by `pairs` inside the flavor. Any non-identity
  // congruence on CN, ISO1, MON or ALMON is a group congruence, hence
  // contains the least group congruence; the result is read off from the
  // gcd of the shift differences. ISO is refused (it has non-group
  // congruences).
  CongruenceClass classify_congruence(Flavor                          fl,
                                      std::vector<ElementPair> const& pairs);

  bool related_under(CongruenceClass const& c,
                     Element const&         a,
                     Element const&         b);

  // dom = {j} u [n, inf), j -> j + 1, identity on the ray. Requires j < n - 1.
  Element alpha_j(Int j, Int n);

  struct ReductionCertificate {
    Element conjugator;
    Element input_first;
    Element input_second;
    Element output_first;
    Element output_second;

    bool operator==(ReductionCertificate const&) const = default;
  };

  // Conjugates two distinct idempotents onto two distinct ray idempotents.
  //
  // With p the least point in exactly one of the two domains and M the larger
  // tail start, the conjugator sends p to M - 1 and fixes [M, inf). Then
  // s^-1 e s is the identity of [M - 1, inf) when p is in dom e and of
  // [M, inf) otherwise.
  ReductionCertificate reduce_idempotent_pair(Flavor         fl,
                                              Element const& e,
                                              Element const& i);

  // Recomputes every certificate invariant.
  bool verify(ReductionCertificate const& cert);

}  // namespace cofinite

#endif  // COFINITE_CONGRUENCE_HPP_
