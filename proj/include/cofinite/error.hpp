#ifndef COFINITE_ERROR_HPP_
#define COFINITE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cofinite {

  enum class ErrorKind {
    RangeCollision,
    BadRay,
    BadFront,
    WindowTooSmall,
    WindowMismatch,
    NotIdempotent,
    NotInCN,
    NotMember,
    NotRelated,
    UnsupportedFlavor,
    BadArguments,
    EqualInputs,
    BadBound,
    InvalidNbhd,
    AnchorOutsideDomain,
    Unsatisfiable,
    Overflow,
    ParseError,
    DomainError
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t offset, std::string const& what)
        : Error(ErrorKind::ParseError,
                "at offset " + std::to_string(offset) + ": " + what),
          _offset(offset) {}

    std::size_t offset() const noexcept {
      return _offset;
    }

   private:
    std::size_t _offset;
  };

}  // namespace cofinite

#endif  // COFINITE_ERROR_HPP_
