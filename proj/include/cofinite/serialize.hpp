// JSON interchange forms.
//
//   Element          {"front":[[x,y],...],"tail_start":N,"shift":k}
//   CongruenceClass  {"kind":"identity"} | {"kind":"group","modulus":d}
//   SolutionSet      {"solutions":[...],"base":Element|null,"extension_count":n}
//   Report           {"samples":n,"violations":[{"pair":[x,y],"product":z}...]}

#ifndef COFINITE_SERIALIZE_HPP_
#define COFINITE_SERIALIZE_HPP_

#include "json.hpp"

#include "cofinite/algebra.hpp"
#include "cofinite/congruence.hpp"
#include "cofinite/element.hpp"
#include "cofinite/topology.hpp"
#include "cofinite/witnesses.hpp"

namespace cofinite {

  using json = nlohmann::json;

  void to_json(json& j, Element const& e);
  // Validates and canonicalizes. Throws DomainError on malformed input.
  void    from_json(json const& j, Element& e);
  Element element_from_json(json const& j);

  void            to_json(json& j, CongruenceClass const& c);
  CongruenceClass congruence_from_json(json const& j);

  void to_json(json& j, SolutionSet const& s);
  void to_json(json& j, GreenReport const& g);
  void to_json(json& j, ReductionCertificate const& c);
  void to_json(json& j, ContainmentReport const& r);

}  // namespace cofinite

#endif  // COFINITE_SERIALIZE_HPP_
