#pragma once

#include "spinstat/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace spinstat {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  /// Requires every coefficient to be real.
  static Polynomial from_scalars(const std::vector<Scalar>& coeffs);
  static Polynomial monomial(std::size_t degree, Rational c = 1);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Quotient and remainder; throws std::domain_error for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  /// Coefficients scaled by the LCM of denominators; the result has integer
  /// coefficients with the same roots.
  Polynomial integer_normalized() const;

  /// e.g. "x^4 - 1" in the given variable.
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor.
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun's square-free decomposition: pairs (factor, multiplicity) whose
/// product with multiplicities equals the monic input.
std::vector<std::pair<Polynomial, std::size_t>> square_free_factors(const Polynomial& p);

/// Root of a square-free polynomial: exact when rational, otherwise an
/// isolating interval (lo, hi] that contains exactly one root.
struct RealRoot {
  bool exact = false;
  Rational value;  ///< exact root, or the interval midpoint
  Rational lo;
  Rational hi;
  double approx = 0.0;
};

/// All real roots of a square-free polynomial in ascending order. Irrational
/// roots are refined until the interval width is below `tolerance` times
/// max(1, |root|).
std::vector<RealRoot> real_roots(const Polynomial& square_free, double tolerance = 1e-12);

/// Exact rational square root when it exists.
bool rational_sqrt(const Rational& q, Rational& out);

}  // namespace spinstat
