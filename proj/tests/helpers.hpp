#ifndef COFINITE_TESTS_HELPERS_HPP_
#define COFINITE_TESTS_HELPERS_HPP_

#include <ostream>
#include <string>

#include "doctest.h"

#include "cofinite/element.hpp"
#include "cofinite/expr.hpp"

namespace cofinite {
  // Lets doctest print elements in failure messages.
  inline std::ostream& operator<<(std::ostream& os, Element const& e) {
    return os << render(e);
  }
}  // namespace cofinite

// Shorthand for literals in tests.
inline cofinite::Element el(std::string const& text) {
  return cofinite::parse_element(text);
}

#define CHECK_ERROR(expr, error_kind)                                  \
  do {                                                                 \
    bool caught_ = false;                                              \
    try {                                                              \
      (void) (expr);                                                   \
    } catch (cofinite::Error const& e_) {                              \
      caught_ = true;                                                  \
      CHECK(e_.kind() == cofinite::ErrorKind::error_kind);             \
    }                                                                  \
    CHECK_MESSAGE(caught_, "expected " #error_kind " from " #expr);    \
  } while (false)

#endif  // COFINITE_TESTS_HELPERS_HPP_
