#pragma once

#include "spinstat/eigensplit.hpp"
#include "spinstat/fock.hpp"
#include "spinstat/theory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinstat {

struct FlavorDetection {
  bool supported = true;  ///< false unless the block has exactly two flavors
  bool antisymmetric = false;
  ExactMatrix block;  ///< K_{1r,2s}
  std::string note;
};

/// `k` is one field's block ordered (flavor, rest). True iff the flavor
/// diagonal blocks vanish and K_{2r,1s} = -K_{1r,2s}.
FlavorDetection detect_flavor_antisymmetry(const ExactMatrix& k, std::size_t flavors);

/// Unitary S held exactly as numerator columns and their squared norms:
/// S = numerators * diag(1/sqrt(norms)).
struct FlavorDiagonalization {
  bool exact = false;
  ExactMatrix numerators;
  std::vector<Rational> norms;
  ExactMatrix d;  ///< diagonal; empty on the numeric path
  EigenSplit spectrum;
  /// Eigenvalues in column order, for both paths (text form, e.g. "-1/2i").
  std::vector<std::string> eigenvalues;
  /// Columns of the numeric path: +1 for the +i mu half, -1 for -i mu.
  std::vector<int> column_signs;
};

/// Eigen route. Columns ordered by ascending imaginary part of the
/// eigenvalue; each eigenvector is scaled so its first nonzero entry is 1
/// and eigenspaces are orthogonalized without normalization. Requires an
/// antisymmetric matrix that is real or purely imaginary.
FlavorDiagonalization diagonalize_flavor(const ExactMatrix& lambda);

/// Flavor-block route for [[0, B], [-B, 0]] = [[0,1],[-1,0]] (x) B:
/// S = S2 (x) I with S2 the 2x2 eigen-route numerators, D = diag(-iB, iB).
FlavorDiagonalization diagonalize_flavor_blocks(const ExactMatrix& b);

struct FockWitness {
  RelationTable table;
  std::string state;  ///< creator word acting on the vacuum
  GramResult gram;
};

struct FlavorDiagnosis {
  bool is_flavor_antisymmetric = false;
  FlavorDiagonalization diagonalization;
  std::vector<int> sector_signs;
  bool negative_norm = false;
  bool inverted_connection_attempt = false;
  bool transformed_fields_hermitian = true;
  std::optional<FockWitness> witness;
  std::string note;
};

/// Signs of the diagonal sectors of D relative to the first nonzero sector.
/// `sector_sizes` partitions the diagonal. A zero sector has sign 0.
/// Throws PreconditionError when a sector is not a real multiple of the
/// reference sector.
std::vector<int> sector_signs(const ExactMatrix& d, const std::vector<std::size_t>& sector_sizes);

/// Fills signs, the negative-norm flag and the Fock witness. `statistics`
/// picks the bracket of the witness table.
FlavorDiagnosis sector_sign_analysis(const FlavorDiagonalization& diag,
                                     const std::vector<std::size_t>& sector_sizes,
                                     Statistics statistics);

struct KirchoffResult {
  bool compliant = true;
  std::string detail;
};

/// Every mode label needs an annihilation term with the negative phase and
/// a creation term with the positive phase, at equal frequency.
KirchoffResult kirchoff_check(const ModeExpansion& expansion);

}  // namespace spinstat
