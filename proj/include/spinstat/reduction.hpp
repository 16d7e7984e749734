#pragma once

// First-order reduction of higher time-derivative bilinear Lagrangians and
// the five-component Duffin-Kemmer form of the scalar wave equation.

#include "spinstat/theory.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace spinstat {

/// F(d/dt) = sum_k coefficients[k] (d/dt)^k.
struct DerivativePolynomial {
  std::vector<Scalar> coefficients;

  /// Highest power with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t degree() const;
  std::string str() const;
};

struct ReductionResult {
  std::size_t order = 0;  ///< N, the number of auxiliary fields
  std::vector<std::string> auxiliary_fields;  ///< "phi", "d1 phi", ...
  KinematicMatrix first_order_K0;             ///< antisymmetric, N x N
  /// H = (1/2) xi^T hamiltonian xi. Equations of motion: 2 K0 xidot = H xi.
  ExactMatrix hamiltonian;
  /// Row i: coefficients of the Ostrogradsky momentum p_i in the xi.
  std::vector<Vector> momenta;
  std::vector<std::string> momentum_combinations;
};

/// Throws PreconditionError for degree < 2, odd degree, or a nonzero odd
/// coefficient.
ReductionResult ostrogradsky_reduce(const DerivativePolynomial& f);

/// det(2 s K0 - H) as coefficients in s, lowest first. Equals f_top^(2M-1) F(s)
/// for F of degree 2M with leading coefficient f_top.
std::vector<Scalar> eliminate_auxiliaries(const ReductionResult& r);

/// True iff a and b are nonzero multiples of each other.
bool proportional(std::span<const Scalar> a, std::span<const Scalar> b);

struct BetaSet {
  std::array<ExactMatrix, 4> beta;
  Rational mass{1};
  std::array<std::string, 5> psi_layout{"phi", "dt phi", "dx phi", "dy phi", "dz phi"};
  std::array<std::string, 5> psibar_layout{"phi", "dt phi", "-dx phi", "-dy phi", "-dz phi"};
};

/// Throws PreconditionError unless m > 0.
BetaSet duffin_kemmer_construct(const Rational& m = 1);

/// Diagonal metric from a signature string such as "+---".
/// Throws FormatError for anything but four '+'/'-' characters.
std::array<int, 4> parse_metric(std::string_view signature);

struct RelationCheck {
  std::string relation;
  std::vector<std::size_t> indices;
  bool holds = false;
};

struct DkpReport {
  std::string metric;
  std::size_t standard_total = 0;
  std::size_t standard_passed = 0;
  std::vector<RelationCheck> standard_failures;
  /// Every index tuple of every printed relation, with its truth value.
  std::vector<RelationCheck> printed;
  bool standard_ok() const { return standard_passed == standard_total; }
};

/// Standard trilinear relation over all 64 triples, then the printed
/// relations: b_m^3 = b_m; b_m b_n b_m = b_m (m != n);
/// b_m b_n^2 + b_n^2 b_m = b_m (m != n); b_m b_n b_l + b_l b_n b_m = 0
/// (m, n, l distinct).
DkpReport verify_dkp_algebra(const BetaSet& betas, std::string_view metric = "+---");

/// (b.k)^3 = (k.k)(b.k) with b.k = sum_m g_mm k_m b_m.
bool dkp_minimal_polynomial_check(const BetaSet& betas, const std::array<Rational, 4>& k,
                                  std::string_view metric = "+---");

}  // namespace spinstat
