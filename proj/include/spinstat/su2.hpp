#pragma once

// Spin-j representations of SU(2) in a rationalized spherical basis.
//
// The textbook ladder elements c_m = sqrt((j-m)(j+m+1)) are irrational in
// general. Conjugating by D = diag(d_m), d_{-j} = 1, d_{m+1} = d_m / c_m,
// turns every generator entry rational:
//   J+ |m> = c_m^2 |m+1>,   J- |m+1> = |m>,   Jz |m> = m |m>.
// Commutation relations, invariant forms and every symmetry verdict are
// unchanged by the similarity. The basis is ordered m = j, j-1, ..., -j,
// so index a corresponds to m = j - a.

#include "spinstat/linalg.hpp"
#include "spinstat/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinstat {

struct SpinLabel {
  unsigned two_j = 0;

  bool is_integer() const { return two_j % 2 == 0; }
  /// (-1)^{2j}
  int parity() const { return is_integer() ? 1 : -1; }
  /// Spherical dimension 2j + 1.
  std::size_t dim() const { return two_j + 1; }
  /// Dimension in the hermitian field basis: 2j+1, or 2(2j+1) after
  /// realification of a half-integer spin.
  std::size_t hermitian_dim() const { return is_integer() ? dim() : 2 * dim(); }

  /// "0", "1", "1/2", "7/2".
  std::string str() const;
  /// Accepts "n" or "n/2". Throws FormatError.
  static SpinLabel parse(std::string_view text);

  friend bool operator==(SpinLabel, SpinLabel) = default;
};

struct RepGenerators {
  std::size_t dim = 0;
  ExactMatrix jx;
  ExactMatrix jy;
  ExactMatrix jz;

  const ExactMatrix& operator[](std::size_t a) const { return a == 0 ? jx : a == 1 ? jy : jz; }
};

enum class BasisTag { Spherical, Hermitian };

struct InvariantForm {
  ExactMatrix matrix;
  SymmetryClass cls = SymmetryClass::Zero;
  BasisTag basis = BasisTag::Spherical;
};

RepGenerators spin_generators(SpinLabel j);

/// d_m^2 for m = j, ..., -j (the conjugation is by the square roots).
std::vector<Rational> rationalizing_scale_sq(SpinLabel j);

/// C_{m,m'} = (-1)^{j-m} delta_{m',-m} in the rationalized spherical basis.
InvariantForm invariant_bilinear(SpinLabel j);

/// Hermitian field basis.
///
/// Integer j: columns of change_of_basis are, for m = j..1, the real pair
///   x_m = -(e_m + q_m e_{-m}),  y_m = i(e_m - q_m e_{-m}),
/// then e_0, with q_m = (-1)^m (2j)! d_m^2. For j = 1 this is the Cartesian
/// (x, y, z) basis. The invariant form (-1)^j T^T C T is positive diagonal;
/// it is the identity for j <= 1 only.
///
/// Half-integer j: realification xi = (Re psi, Im psi) of dimension
/// 2(2j+1); change_of_basis maps xi to (psi, conj psi). The generators are
/// i R(-iJ) with R(X) = [[Re X, -Im X], [Im X, Re X]]; the form is the
/// antisymmetric Im(psi1^T C psi2) = [[0, C], [C, 0]], which for j = 1/2 is
/// i[[0, s2], [s2, 0]] with s2 the second Pauli matrix (no permutation).
/// The metric is the symmetric invariant Re(psi1^dag D^2 psi2).
struct HermitianBasis {
  ExactMatrix change_of_basis;
  RepGenerators generators;
  InvariantForm form;
  ExactMatrix metric;  ///< positive diagonal symmetric invariant form
};

HermitianBasis hermitian_basis(SpinLabel j);

struct FormSpace {
  std::size_t sym_dim = 0;
  std::size_t antisym_dim = 0;
  std::vector<ExactMatrix> sym_basis;
  std::vector<ExactMatrix> antisym_basis;
};

/// All M with Ja^T M + M Ja = 0, split by symmetry.
FormSpace invariant_form_space(const RepGenerators& gens);

/// True when [Jx, Jy] = iJz and cyclic.
bool satisfies_commutation(const RepGenerators& gens);

/// kron(I_copies, J) for each generator.
RepGenerators replicate(const RepGenerators& gens, std::size_t copies);

/// Generators of the trivial action on n components.
RepGenerators trivial_generators(std::size_t n);

/// Block-diagonal direct sum of several representations.
RepGenerators direct_sum(std::span<const RepGenerators> parts);

/// Ja^T M + M Ja for a = x, y, z.
std::vector<ExactMatrix> invariance_defects(const RepGenerators& gens, const ExactMatrix& m);

}  // namespace spinstat
