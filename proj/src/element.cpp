#include "cofinite/element.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cofinite {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::RangeCollision: return "RangeCollision";
      case ErrorKind::BadRay: return "BadRay";
      case ErrorKind::BadFront: return "BadFront";
      case ErrorKind::WindowTooSmall: return "WindowTooSmall";
      case ErrorKind::WindowMismatch: return "WindowMismatch";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::NotInCN: return "NotInCN";
      case ErrorKind::NotMember: return "NotMember";
      case ErrorKind::NotRelated: return "NotRelated";
      case ErrorKind::UnsupportedFlavor: return "UnsupportedFlavor";
      case ErrorKind::BadArguments: return "BadArguments";
      case ErrorKind::EqualInputs: return "EqualInputs";
      case ErrorKind::BadBound: return "BadBound";
      case ErrorKind::InvalidNbhd: return "InvalidNbhd";
      case ErrorKind::AnchorOutsideDomain: return "AnchorOutsideDomain";
      case ErrorKind::Unsatisfiable: return "Unsatisfiable";
      case ErrorKind::Overflow: return "Overflow";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::DomainError: return "DomainError";
    }
    return "Unknown";
  }

  Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw Error(ErrorKind::Overflow,
                  std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
  }

  Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw Error(ErrorKind::Overflow,
                  std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Flavor
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Flavor fl) {
    switch (fl) {
      case Flavor::CN: return "cn";
      case Flavor::ISO: return "iso";
      case Flavor::ISO1: return "iso1";
      case Flavor::MON: return "mon";
      case Flavor::ALMON: return "almon";
    }
    return "?";
  }

  std::optional<Flavor> parse_flavor(std::string_view name) {
    for (auto fl : all_flavors) {
      if (to_string(fl) == name) {
        return fl;
      }
    }
    return std::nullopt;
  }

  bool contained_in(Flavor sub, Flavor super) {
    if (sub == super || sub == Flavor::CN || super == Flavor::ALMON) {
      return true;
    }
    if (super == Flavor::MON) {
      return sub == Flavor::ISO || sub == Flavor::ISO1;
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  std::optional<Int> Element::operator()(Int n) const {
    if (n < 1) {
      return std::nullopt;
    }
    if (n >= _tail_start) {
      return checked_add(n, _shift);
    }
    auto it = std::lower_bound(
        _front.begin(), _front.end(), n, [](FrontPair const& p, Int v) {
          return p.from < v;
        });
    if (it != _front.end() && it->from == n) {
      return it->to;
    }
    return std::nullopt;
  }

  bool Element::is_canonical() const noexcept {
    if (_tail_start == 1 || _front.empty()) {
      return true;
    }
    auto const& last = _front.back();
    return last.from != _tail_start - 1 || last.to - last.from != _shift;
  }

  Element validate(std::vector<FrontPair> front, Int tail_start, Int shift) {
    if (tail_start < 1) {
      throw Error(ErrorKind::BadRay,
                  "tail_start must be positive, got "
                      + std::to_string(tail_start));
    }
    Int const ray_image = checked_add(tail_start, shift);
    if (ray_image < 1) {
      throw Error(ErrorKind::BadRay,
                  "tail_start + shift = " + std::to_string(ray_image)
                      + " < 1");
    }
    std::sort(front.begin(), front.end());
    std::set<Int> images;
    for (std::size_t i = 0; i < front.size(); ++i) {
      auto const [x, y] = front[i];
      if (x < 1 || y < 1) {
        throw Error(ErrorKind::BadFront,
                    "front pair (" + std::to_string(x) + ","
                        + std::to_string(y) + ") is not positive");
      }
      if (x >= tail_start) {
        throw Error(ErrorKind::BadFront,
                    "front point " + std::to_string(x)
                        + " is not below tail_start "
                        + std::to_string(tail_start));
      }
      if (i > 0 && front[i - 1].from == x) {
        throw Error(ErrorKind::BadFront,
                    "duplicate front point " + std::to_string(x));
      }
      if (y >= ray_image) {
        throw Error(ErrorKind::RangeCollision,
                    "front value " + std::to_string(y)
                        + " lies in the ray's range ["
                        + std::to_string(ray_image) + ",inf)");
      }
      if (!images.insert(y).second) {
        throw Error(ErrorKind::RangeCollision,
                    "duplicate front value " + std::to_string(y));
      }
    }
    return Element(std::move(front), tail_start, shift);
  }

  Element canonicalize(Element e) {
    auto& front = e._front;
    while (e._tail_start > 1 && !front.empty()
           && front.back().from == e._tail_start - 1
           && front.back().to - front.back().from == e._shift) {
      front.pop_back();
      --e._tail_start;
    }
    return e;
  }

  Element make_element(std::vector<FrontPair> front, Int tail_start, Int shift) {
    return canonicalize(validate(std::move(front), tail_start, shift));
  }

  Element from_parts_unchecked(std::vector<FrontPair> front,
                               Int                    tail_start,
                               Int                    shift) {
    return Element(std::move(front), tail_start, shift);
  }

  std::optional<Int> apply(Element const& e, Int n) {
    return e(n);
  }

  std::vector<Int> dom_missing(Element const& e) {
    std::vector<Int> out;
    auto             it = e.front().begin();
    for (Int n = 1; n < e.tail_start(); ++n) {
      if (it != e.front().end() && it->from == n) {
        ++it;
      } else {
        out.push_back(n);
      }
    }
    return out;
  }

  std::vector<Int> ran_missing(Element const& e) {
    std::vector<Int> values;
    values.reserve(e.front().size());
    for (auto const& p : e.front()) {
      values.push_back(p.to);
    }
    std::sort(values.begin(), values.end());
    std::vector<Int> out;
    auto             it  = values.begin();
    Int const        end = e.tail_start() + e.shift();
    for (Int n = 1; n < end; ++n) {
      if (it != values.end() && *it == n) {
        ++it;
      } else {
        out.push_back(n);
      }
    }
    return out;
  }

  SupportSummary support_summary(Element const& e) {
    return {dom_missing(e), ran_missing(e), e.shift(), e.tail_start()};
  }

  ////////////////////////////////////////////////////////////////////////
  // TruncatedMap
  ////////////////////////////////////////////////////////////////////////

  TruncatedMap::TruncatedMap(Int window, std::map<Int, Int> entries)
      : _window(window), _entries(std::move(entries)) {
    if (window < 1) {
      throw Error(ErrorKind::BadArguments, "window must be positive");
    }
    std::set<Int> values;
    for (auto const& [x, y] : _entries) {
      if (x < 1 || x > window || y < 1) {
        throw Error(ErrorKind::BadArguments,
                    "entry " + std::to_string(x) + "->" + std::to_string(y)
                        + " outside window " + std::to_string(window));
      }
      if (!values.insert(y).second) {
        throw Error(ErrorKind::BadArguments,
                    "truncated map is not injective at value "
                        + std::to_string(y));
      }
    }
  }

  std::optional<Int> TruncatedMap::lookup(Int n) const {
    auto it = _entries.find(n);
    if (it == _entries.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  TruncatedMap TruncatedMap::restricted(Int bound) const {
    std::map<Int, Int> kept(_entries.begin(), _entries.upper_bound(bound));
    return TruncatedMap(_window, std::move(kept));
  }

  TruncatedMap truncate(Element const& e, Int window) {
    if (window < e.tail_start()) {
      throw Error(ErrorKind::WindowTooSmall,
                  "window " + std::to_string(window) + " < tail_start "
                      + std::to_string(e.tail_start()));
    }
    std::map<Int, Int> entries;
    for (Int n = 1; n <= window; ++n) {
      if (auto v = e(n)) {
        entries.emplace(n, *v);
      }
    }
    return TruncatedMap(window, std::move(entries));
  }

  TruncatedMap oracle_compose(TruncatedMap const& first,
                              TruncatedMap const& second) {
    if (first.window() != second.window()) {
      throw Error(ErrorKind::WindowMismatch,
                  std::to_string(first.window())
                      + " != " + std::to_string(second.window()));
    }
    std::map<Int, Int> entries;
    for (auto const& [x, y] : first.entries()) {
      if (auto z = second.lookup(y)) {
        entries.emplace(x, *z);
      }
    }
    return TruncatedMap(first.window(), std::move(entries));
  }

}  // namespace cofinite
