#include "cofinite/algebra.hpp"

#include <algorithm>
#include <string>

namespace cofinite {

  Element compose(Element const& a, Element const& b) {
    Int const shift = checked_add(a.shift(), b.shift());
    // From `ray` on, a lands inside b's ray and the product is a pure shift.
    Int const ray = std::max(a.tail_start(), checked_sub(b.tail_start(), a.shift()));

    std::vector<FrontPair> front;
    for (auto const& [x, y] : a.front()) {
      if (auto z = b(y)) {
        front.push_back({x, *z});
      }
    }
    for (Int x = a.tail_start(); x < ray; ++x) {
      if (auto z = b(checked_add(x, a.shift()))) {
        front.push_back({x, *z});
      }
    }
    return canonicalize(from_parts_unchecked(std::move(front), ray, shift));
  }

  Element invert(Element const& a) {
    std::vector<FrontPair> front;
    front.reserve(a.front().size());
    for (auto const& [x, y] : a.front()) {
      front.push_back({y, x});
    }
    std::sort(front.begin(), front.end());
    return canonicalize(from_parts_unchecked(
        std::move(front), checked_add(a.tail_start(), a.shift()), -a.shift()));
  }

  Element identity() {
    return Element();
  }

  Element generator_a() {
    return from_parts_unchecked({}, 1, 1);
  }

  Element generator_b() {
    return from_parts_unchecked({}, 2, -1);
  }

  Element make_idempotent(std::set<Int> const& missing) {
    if (missing.empty()) {
      return identity();
    }
    if (*missing.begin() < 1) {
      throw Error(ErrorKind::BadArguments, "missing points must be positive");
    }
    Int const              top = *missing.rbegin();
    std::vector<FrontPair> front;
    for (Int n = 1; n < top; ++n) {
      if (!missing.contains(n)) {
        front.push_back({n, n});
      }
    }
    return canonicalize(from_parts_unchecked(std::move(front), top + 1, 0));
  }

  Element epsilon(Int i) {
    return make_idempotent({i});
  }

  Element ray_idempotent(Int n) {
    if (n < 1) {
      throw Error(ErrorKind::BadArguments, "ray start must be positive");
    }
    return from_parts_unchecked({}, n, 0);
  }

  bool is_idempotent(Element const& a) {
    return a.shift() == 0
           && std::all_of(a.front().begin(),
                          a.front().end(),
                          [](FrontPair const& p) { return p.from == p.to; });
  }

  namespace {
    void require_idempotent(Element const& e) {
      if (!is_idempotent(e)) {
        throw Error(ErrorKind::NotIdempotent, "expected an idempotent");
      }
    }
  }  // namespace

  std::vector<Element> idempotent_factorization(Element const& e) {
    require_idempotent(e);
    std::vector<Element> out;
    for (Int n : dom_missing(e)) {
      out.push_back(epsilon(n));
    }
    return out;
  }

  bool natural_leq(Element const& e, Element const& f) {
    require_idempotent(e);
    require_idempotent(f);
    auto const me = dom_missing(e);
    auto const mf = dom_missing(f);
    return std::includes(me.begin(), me.end(), mf.begin(), mf.end());
  }

  bool member(Flavor fl, Element const& a) {
    auto const front = a.front();
    switch (fl) {
      case Flavor::ALMON: return true;
      case Flavor::CN: return front.empty();
      case Flavor::ISO:
        return std::all_of(front.begin(), front.end(), [&](FrontPair const& p) {
          return p.to - p.from == a.shift();
        });
      case Flavor::MON:
      case Flavor::ISO1: {
        // Front values below tail_start + shift by validity, so only the
        // front itself needs to be increasing.
        for (std::size_t i = 1; i < front.size(); ++i) {
          if (front[i - 1].to >= front[i].to) {
            return false;
          }
        }
        if (fl == Flavor::MON) {
          return true;
        }
        return std::all_of(
            front.begin() + (front.empty() ? 0 : 1),
            front.end(),
            [&](FrontPair const& p) { return p.to - p.from == a.shift(); });
      }
    }
    return false;
  }

  Thresholds thresholds(Element const& a) {
    auto const front = a.front();
    if (front.empty()) {
      return {a.tail_start(), a.tail_start(), std::nullopt};
    }
    return {a.tail_start(), front.front().from, front.back().from};
  }

  Element arrow(Element const& a) {
    return from_parts_unchecked({}, a.tail_start(), a.shift());
  }

  Element cn_element(Int i, Int j) {
    if (i < 0 || j < 0) {
      throw Error(ErrorKind::BadArguments,
                  "cn exponents must be non-negative");
    }
    return from_parts_unchecked({}, checked_add(i, 1), checked_sub(j, i));
  }

  std::pair<Int, Int> cn_decompose(Element const& a) {
    if (!member(Flavor::CN, a)) {
      throw Error(ErrorKind::NotInCN, "element has a non-empty front");
    }
    Int const i = a.tail_start() - 1;
    return {i, checked_add(i, a.shift())};
  }

  namespace {
    // True iff (N \ from_missing) + k == N \ to_missing for the unique k
    // compatible with the counts.
    bool translates_onto(std::vector<Int> const& from_missing,
                         std::vector<Int> const& to_missing) {
      Int const k = static_cast<Int>(to_missing.size())
                    - static_cast<Int>(from_missing.size());
      if (k < 0) {
        return translates_onto(to_missing, from_missing);
      }
      // N \ (D + k) = [1, k] u (M + k) where D = N \ M.
      std::vector<Int> expected;
      for (Int n = 1; n <= k; ++n) {
        expected.push_back(n);
      }
      for (Int m : from_missing) {
        expected.push_back(m + k);
      }
      return expected == to_missing;
    }
  }  // namespace

  GreenReport green(Flavor fl, Element const& a, Element const& b) {
    if (!member(fl, a) || !member(fl, b)) {
      throw Error(ErrorKind::NotMember,
                  "arguments must belong to " + to_string(fl));
    }
    auto const da = dom_missing(a);
    auto const db = dom_missing(b);
    bool const r  = da == db;
    bool const l  = ran_missing(a) == ran_missing(b);

    std::optional<bool> d;
    switch (fl) {
      case Flavor::CN:
      case Flavor::MON:
      case Flavor::ALMON: d = true; break;
      case Flavor::ISO: d = translates_onto(da, db); break;
      case Flavor::ISO1: d = std::nullopt; break;
    }
    return {r, l, r && l, d};
  }

}  // namespace cofinite
