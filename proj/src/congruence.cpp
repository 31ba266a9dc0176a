#include "cofinite/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cofinite/algebra.hpp"

namespace cofinite {

  Int shift_index(Element const& a) {
    return a.shift();
  }

  bool cmg_related(Element const& a, Element const& b) {
    return shift_index(a) == shift_index(b);
  }

  Element cmg_witness(Element const& a, Element const& b) {
    if (!cmg_related(a, b)) {
      throw Error(ErrorKind::NotRelated,
                  "shift indices " + std::to_string(shift_index(a)) + " and "
                      + std::to_string(shift_index(b)) + " differ");
    }
    Int const k = a.shift();
    Int       n = std::max<Int>({1,
                                 checked_add(a.tail_start(), k),
                                 checked_add(b.tail_start(), k)});
    for (auto const* x : {&a, &b}) {
      for (auto const& p : x->front()) {
        n = std::max(n, p.to + 1);
      }
    }
    Element e = ray_idempotent(n);
    if (compose(a, e) != compose(b, e)) {
      throw std::logic_error("cmg_witness: witness failed verification");
    }
    return e;
  }

  CongruenceClass CongruenceClass::group(Int modulus) {
    if (modulus < 0) {
      throw Error(ErrorKind::BadArguments, "modulus must be non-negative");
    }
    return CongruenceClass(Kind::Group, modulus);
  }

  CongruenceClass classify_congruence(Flavor                          fl,
                                      std::vector<ElementPair> const& pairs) {
    if (fl == Flavor::ISO) {
      throw Error(ErrorKind::UnsupportedFlavor,
                  "iso admits non-group congruences");
    }
    bool trivial = true;
    Int  d       = 0;
    for (auto const& [x, y] : pairs) {
      if (!member(fl, x) || !member(fl, y)) {
        throw Error(ErrorKind::NotMember,
                    "generating pair outside " + to_string(fl));
      }
      if (x != y) {
        trivial = false;
      }
      Int const diff = checked_sub(shift_index(x), shift_index(y));
      d              = std::gcd(d, diff < 0 ? -diff : diff);
    }
    if (trivial) {
      return CongruenceClass::identity();
    }
    return CongruenceClass::group(d);
  }

  bool related_under(CongruenceClass const& c,
                     Element const&         a,
                     Element const&         b) {
    if (c.kind() == CongruenceClass::Kind::Identity) {
      return a == b;
    }
    Int const d = *c.modulus();
    if (d == 0) {
      return cmg_related(a, b);
    }
    Int const diff = checked_sub(shift_index(a), shift_index(b));
    return diff % d == 0;
  }

  Element alpha_j(Int j, Int n) {
    if (j < 1 || j >= n - 1) {
      throw Error(ErrorKind::BadArguments,
                  "need 1 <= j < n - 1, got j=" + std::to_string(j)
                      + " n=" + std::to_string(n));
    }
    return make_element({{j, j + 1}}, n, 0);
  }

  bool verify(ReductionCertificate const& c) {
    Element const inv = invert(c.conjugator);
    return c.output_first == compose(compose(inv, c.input_first), c.conjugator)
           && c.output_second
                  == compose(compose(inv, c.input_second), c.conjugator)
           && c.output_first != c.output_second
           && member(Flavor::CN, c.output_first)
           && member(Flavor::CN, c.output_second)
           && is_idempotent(c.output_first) && is_idempotent(c.output_second)
           && member(Flavor::ISO1, c.conjugator);
  }

  ReductionCertificate reduce_idempotent_pair(Flavor         fl,
                                              Element const& e,
                                              Element const& i) {
    if (fl == Flavor::CN || fl == Flavor::ISO) {
      throw Error(ErrorKind::UnsupportedFlavor,
                  "reduction is defined for iso1, mon and almon");
    }
    if (!is_idempotent(e) || !is_idempotent(i)) {
      throw Error(ErrorKind::NotIdempotent, "both inputs must be idempotent");
    }
    if (e == i) {
      throw Error(ErrorKind::EqualInputs, "idempotents must be distinct");
    }
    Int const top = std::max(e.tail_start(), i.tail_start());
    Int       p   = 1;
    while (e.in_domain(p) == i.in_domain(p)) {
      ++p;
    }
    Element const conj  = make_element({{p, top - 1}}, top, 0);
    Element const inv   = invert(conj);
    ReductionCertificate cert{conj,
                              e,
                              i,
                              compose(compose(inv, e), conj),
                              compose(compose(inv, i), conj)};
    if (!verify(cert)) {
      throw std::logic_error("reduce_idempotent_pair: certificate invalid");
    }
    return cert;
  }

}  // namespace cofinite
