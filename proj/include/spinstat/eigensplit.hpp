#pragma once

#include "spinstat/matrix.hpp"
#include "spinstat/polynomial.hpp"

#include <string>
#include <vector>

namespace spinstat {

/// How the eigenvalues of one pair relate to mu.
/// Imaginary: +-i*mu (real antisymmetric input).
/// Real: +-mu (input is i times a real antisymmetric matrix).
enum class PairForm { Imaginary, Real };

struct EigenMagnitude {
  bool exact = false;
  Rational mu;         ///< exact value, or interval midpoint when !exact
  Rational mu_sq;      ///< exact when the squared root was rational
  Polynomial minimal;  ///< square-free factor in t = mu^2 carrying this root
  double approx = 0.0;
  Rational lo;  ///< certified bracket lo <= mu <= hi; mu != 0 is exact
  Rational hi;
  std::size_t multiplicity = 0;  ///< number of +- pairs
};

struct EigenSplit {
  PairForm form = PairForm::Imaginary;
  std::vector<EigenMagnitude> pairs;  ///< ascending mu, mu > 0
  std::size_t zero_multiplicity = 0;  ///< eigenvalues equal to 0
  Polynomial characteristic;          ///< det(xI - M) for real M, of M/i otherwise
};

/// Eigenvalue magnitudes of an antisymmetric matrix that is real or purely
/// imaginary. Throws PreconditionError for anything else.
EigenSplit antisym_eigensplit(const ExactMatrix& m);

std::string to_string(PairForm f);

}  // namespace spinstat
