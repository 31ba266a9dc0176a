// Canonical representation of cofinite almost monotone partial injections
// of the positive integers.
//
// Every such map agrees with a pure shift n -> n + k on some ray [N, inf),
// so it is stored as a finite sorted "front" below N plus the pair (N, k).

#ifndef COFINITE_ELEMENT_HPP_
#define COFINITE_ELEMENT_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cofinite/error.hpp"

namespace cofinite {

  using Int = std::int64_t;

  // Overflow is a hard error, never wraparound.
  Int checked_add(Int a, Int b);
  Int checked_sub(Int a, Int b);

  struct FrontPair {
    Int from;
    Int to;

    auto operator<=>(FrontPair const&) const = default;
  };

  // The five inverse submonoids:
  //   CN    the bicyclic copy generated by n -> n+1 and its inverse,
  //   ISO   cofinite partial isometries,
  //   ISO1  monotone maps that are isometries off their least domain point,
  //   MON   cofinite monotone partial bijections,
  //   ALMON cofinite almost monotone partial bijections (everything here).
  // Hasse order: CN <= {ISO, ISO1} <= MON <= ALMON.
  enum class Flavor { CN, ISO, ISO1, MON, ALMON };

  std::string        to_string(Flavor fl);
  std::optional<Flavor> parse_flavor(std::string_view name);
  // true iff every member of `sub` is a member of `super`.
  bool contained_in(Flavor sub, Flavor super);

  inline constexpr Flavor all_flavors[]
      = {Flavor::CN, Flavor::ISO, Flavor::ISO1, Flavor::MON, Flavor::ALMON};

  class Element {
   public:
    // The identity map of N.
    Element() = default;

    std::span<FrontPair const> front() const noexcept {
      return _front;
    }
    Int tail_start() const noexcept {
      return _tail_start;
    }
    Int shift() const noexcept {
      return _shift;
    }

    // Image of n, or nullopt when n is outside the domain.
    std::optional<Int> operator()(Int n) const;

    bool in_domain(Int n) const {
      return (*this)(n).has_value();
    }

    // True iff tail_start is the least possible ray start.
    bool is_canonical() const noexcept;

    auto operator<=>(Element const&) const = default;
    bool operator==(Element const&) const  = default;

   private:
    friend Element validate(std::vector<FrontPair>, Int, Int);
    friend Element canonicalize(Element);
    friend Element from_parts_unchecked(std::vector<FrontPair>, Int, Int);

    Element(std::vector<FrontPair> front, Int tail_start, Int shift)
        : _front(std::move(front)), _tail_start(tail_start), _shift(shift) {}

    std::vector<FrontPair> _front;
    Int                    _tail_start = 1;
    Int                    _shift      = 0;
  };

  // Checks every invariant except canonical minimality. The front may be
  // given in any order; it is stored sorted by `from`.
  Element validate(std::vector<FrontPair> front, Int tail_start, Int shift);

  // Merges front pairs into the ray while the point just below the ray start
  // carries the ray's offset. Same partial function, minimal tail_start.
  Element canonicalize(Element e);

  // validate followed by canonicalize.
  Element make_element(std::vector<FrontPair> front, Int tail_start, Int shift);

  // Skips validation. Callers guarantee the validate invariants.
  Element from_parts_unchecked(std::vector<FrontPair> front,
                               Int                    tail_start,
                               Int                    shift);

  std::optional<Int> apply(Element const& e, Int n);

  struct SupportSummary {
    std::vector<Int> dom_missing;
    std::vector<Int> ran_missing;
    Int              shift;
    Int              tail_start;

    bool operator==(SupportSummary const&) const = default;
  };

  SupportSummary   support_summary(Element const& e);
  std::vector<Int> dom_missing(Element const& e);
  std::vector<Int> ran_missing(Element const& e);

  // Explicit finite partial injection on the window [1..window]. Values are
  // unbounded. Used as a brute-force oracle only.
  class TruncatedMap {
   public:
    explicit TruncatedMap(Int window, std::map<Int, Int> entries = {});

    Int window() const noexcept {
      return _window;
    }
    std::map<Int, Int> const& entries() const noexcept {
      return _entries;
    }
    std::optional<Int> lookup(Int n) const;

    // Entries with key <= bound.
    TruncatedMap restricted(Int bound) const;

    bool operator==(TruncatedMap const&) const = default;

   private:
    Int                _window;
    std::map<Int, Int> _entries;
  };

  // Throws WindowTooSmall when window < tail_start.
  TruncatedMap truncate(Element const& e, Int window);

  // Left-to-right composition of two truncated maps on the same window.
  TruncatedMap oracle_compose(TruncatedMap const& first,
                              TruncatedMap const& second);

}  // namespace cofinite

#endif  // COFINITE_ELEMENT_HPP_
