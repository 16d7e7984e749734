#pragma once

// Gaussian rationals: exact complex numbers with rational real and
// imaginary parts. Every verdict in the analyzer is computed with these.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spinstat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed scalar or matrix text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation receives operands of incompatible shape.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition on its input does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rational to text: "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" with optional sign.
Rational parse_rational(std::string_view text);

/// Sign of a rational: -1, 0 or +1.
int sign(const Rational& q);

class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_imaginary() const { return re_ == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return {-re_, -im_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form `re+imi`, e.g. `0+1i`, `-1/2+0i`, `3-5/2i`.
  std::string str() const;

  /// Accepts `a`, `a/b`, `a/b+c/di`, `c/di`, `i`, `-i` with optional signs
  /// and no interior whitespace. Throws FormatError.
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace spinstat
