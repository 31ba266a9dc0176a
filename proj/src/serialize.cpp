#include "cofinite/serialize.hpp"

namespace cofinite {

  void to_json(json& j, Element const& e) {
    json front = json::array();
    for (auto const& p : e.front()) {
      front.push_back({p.from, p.to});
    }
    j = json{{"front", std::move(front)},
             {"tail_start", e.tail_start()},
             {"shift", e.shift()}};
  }

  Element element_from_json(json const& j) {
    try {
      std::vector<FrontPair> front;
      for (auto const& p : j.at("front")) {
        if (!p.is_array() || p.size() != 2) {
          throw Error(ErrorKind::DomainError, "front entries must be [x,y]");
        }
        front.push_back({p[0].get<Int>(), p[1].get<Int>()});
      }
      return make_element(
          std::move(front), j.at("tail_start").get<Int>(), j.at("shift").get<Int>());
    } catch (json::exception const& ex) {
      throw Error(ErrorKind::DomainError, ex.what());
    } catch (Error const& ex) {
      if (ex.kind() == ErrorKind::DomainError) {
        throw;
      }
      throw Error(ErrorKind::DomainError, ex.what());
    }
  }

  void from_json(json const& j, Element& e) {
    e = element_from_json(j);
  }

  void to_json(json& j, CongruenceClass const& c) {
    if (c.kind() == CongruenceClass::Kind::Identity) {
      j = json{{"kind", "identity"}};
    } else {
      j = json{{"kind", "group"}, {"modulus", *c.modulus()}};
    }
  }

  CongruenceClass congruence_from_json(json const& j) {
    try {
      auto const kind = j.at("kind").get<std::string>();
      if (kind == "identity") {
        return CongruenceClass::identity();
      }
      if (kind == "group") {
        return CongruenceClass::group(j.at("modulus").get<Int>());
      }
      throw Error(ErrorKind::DomainError, "unknown congruence kind " + kind);
    } catch (json::exception const& ex) {
      throw Error(ErrorKind::DomainError, ex.what());
    }
  }

  void to_json(json& j, SolutionSet const& s) {
    j = json{{"solutions", s.solutions},
             {"base", s.base ? json(*s.base) : json(nullptr)},
             {"extension_count", s.extension_count}};
  }

  void to_json(json& j, GreenReport const& g) {
    j = json{{"r_related", g.r_related},
             {"l_related", g.l_related},
             {"h_related", g.h_related},
             {"d_related", g.d_related ? json(*g.d_related) : json(nullptr)}};
  }

  void to_json(json& j, ReductionCertificate const& c) {
    j = json{{"conjugator", c.conjugator},
             {"input", {c.input_first, c.input_second}},
             {"output", {c.output_first, c.output_second}}};
  }

  void to_json(json& j, ContainmentReport const& r) {
    json violations = json::array();
    for (auto const& v : r.violations) {
      violations.push_back(
          {{"kind", v.kind}, {"pair", {v.first, v.second}}, {"product", v.result}});
    }
    j = json{{"samples", r.samples}, {"violations", std::move(violations)}};
  }

}  // namespace cofinite
