#pragma once

// Statistics allowed by the action principle for a given kinematic matrix,
// canonical brackets, and the per-field spin/statistics verdict.

#include "spinstat/flavor.hpp"
#include "spinstat/invariance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinstat {

enum class Consistency { Consistent, Degenerate };

std::string to_string(Consistency c);

struct ConsistencyResult {
  Consistency status = Consistency::Degenerate;
  std::string reason;  ///< empty when Consistent
};

/// Bose needs a nonzero antisymmetric part of K, Fermi a nonzero symmetric
/// part. Otherwise the surface variation commutes with every field.
ConsistencyResult surface_variation_consistency(const ExactMatrix& k, Statistics s);

struct CanonicalRelationSet {
  Statistics statistics = Statistics::Bose;
  Bracket bracket = Bracket::Commutator;
  ExactMatrix momentum_map;  ///< Pi = P xi
  std::vector<std::size_t> canonical;
  std::vector<std::size_t> constraints;
  /// [xi_n, Pi_j] on the canonical block: i times the identity.
  ExactMatrix coefficients;
  /// [xi_a, xi_b] on the canonical block, i (P_c^T)^-1.
  ExactMatrix field_brackets;
};

/// Throws PreconditionError carrying the Degenerate reason, unless K = 0
/// (which yields an empty canonical set).
CanonicalRelationSet canonical_momenta(const ExactMatrix& k, Statistics s);

struct StatisticsVerdict {
  std::string field;
  SpinLabel spin;
  bool kinematic_available = true;
  bool unsupported = false;
  /// The matrix the verdict is read from: the field's block, or the
  /// off-diagonal flavor block for antisymmetric-pair coupling.
  ExactMatrix analyzed;
  bool analyzed_flavor_block = false;
  SymmetryClass required_symmetry = SymmetryClass::Zero;
  SymmetryClass observed_symmetry = SymmetryClass::Zero;
  bool invariant = true;
  ConsistencyResult bose;
  ConsistencyResult fermi;
  std::optional<Statistics> consistent_statistics;
  int michel_parity = 1;  ///< (-1)^(2s)
  Statistics pinned = Statistics::Auto;
  bool contradiction = false;
  std::string explanation;
  std::optional<CanonicalRelationSet> canonical;
  std::optional<FlavorDiagnosis> flavor;
};

struct TheoryVerdict {
  KinematicBuild build;
  InvarianceReport invariance;
  SymmetryClass symmetry = SymmetryClass::Zero;
  std::vector<StatisticsVerdict> fields;
};

/// Per field: symmetry demanded by rotations, statistics allowed by the
/// action principle, and their agreement with pinned statistics. For
/// antisymmetric-pair coupling the flavor block decides the statistics and
/// the flavor diagnosis is attached.
TheoryVerdict spin_statistics_verdict(const TheorySpec& spec);

}  // namespace spinstat
