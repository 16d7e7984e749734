#pragma once

#include "spinstat/theory.hpp"

#include <vector>

namespace spinstat {

struct InvarianceViolation {
  char generator;  ///< 'x', 'y' or 'z'
  std::size_t row;  ///< 0-based
  std::size_t col;
  Scalar value;  ///< entry of J^T K + K J
};

struct InvarianceReport {
  bool invariant = true;
  std::size_t violation_count = 0;
  std::vector<InvarianceViolation> violations;  ///< first few, row-major per generator
};

/// Passes iff Ja^T K + K Ja = 0 for a = x, y, z on the full index space.
/// Throws DimensionError when the sizes differ.
InvarianceReport check_su2_invariance(const ExactMatrix& k, const RepGenerators& gens,
                                      std::size_t max_listed = 8);
InvarianceReport check_su2_invariance(const KinematicMatrix& k, const RepGenerators& gens,
                                      std::size_t max_listed = 8);

/// Antisymmetric for even 2j, Symmetric for odd 2j.
SymmetryClass required_symmetry(SpinLabel j);
/// The class of the invariant scalar product itself (the opposite one).
SymmetryClass scalar_product_symmetry(SpinLabel j);

struct ConstraintSplit {
  ExactMatrix momentum_map;                 ///< Pi = P xi
  std::vector<std::size_t> canonical;       ///< pivot columns of P
  std::vector<std::size_t> constraints;     ///< the remaining indices
  std::vector<Vector> kernel;               ///< basis of ker P
  ExactMatrix nonsingular_block;            ///< P on the canonical indices
  ExactMatrix kinematic_block;              ///< K on the canonical indices
};

/// P = (K^T - K)/2 for Bose, (K^T + K)/2 for Fermi. Statistics::Auto is a
/// precondition error.
ConstraintSplit constraint_split(const ExactMatrix& k, Statistics s);

/// Graded symbolic expansion of the kinematic bilinear
/// (1/2) sum K_rs (xi_r xidot_s - xidot_r xi_s) with commuting
/// (Bose) or anticommuting (Fermi) placeholders. Every term is brought to
/// the form xi_a xidot_b; entry (a, b) of the result is its coefficient.
ExactMatrix kinematic_bilinear(const ExactMatrix& k, Statistics placeholders);

}  // namespace spinstat
