#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rheight {

  using index_type = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when an invariant the mathematics guarantees fails to hold; always
  // indicates a bug in this library rather than bad input.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  class PreconditionViolated : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class EmptyOperand : public Error {
   public:
    using Error::Error;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(index_type a, index_type b, index_type c)
        : Error("table is not associative: (ab)c != a(bc) for (a, b, c) = ("
                + std::to_string(a) + ", " + std::to_string(b) + ", "
                + std::to_string(c) + ")"),
          a_(a),
          b_(b),
          c_(c) {}

    index_type a() const noexcept { return a_; }
    index_type b() const noexcept { return b_; }
    index_type c() const noexcept { return c_; }

   private:
    index_type a_, b_, c_;
  };

  class NotClosed : public Error {
   public:
    NotClosed(index_type x, index_type y)
        : Error("subset is not closed under multiplication: product of "
                + std::to_string(x) + " and " + std::to_string(y)
                + " escapes"),
          x_(x),
          y_(y) {}

    index_type left() const noexcept { return x_; }
    index_type right() const noexcept { return y_; }

   private:
    index_type x_, y_;
  };

  class InvalidSubset : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public Error {
   public:
    explicit CapExceeded(std::size_t cap)
        : Error("more than " + std::to_string(cap)
                + " irreducible words; the presentation presumably defines "
                  "an infinite semigroup"),
          cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

   private:
    std::size_t cap_;
  };

  class InvalidPresentation : public Error {
   public:
    using Error::Error;
  };

  class OutOfRange : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedInfinite : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_, column_;
  };

}  // namespace rheight
