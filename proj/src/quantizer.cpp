#include "spinstat/quantizer.hpp"

#include "spinstat/linalg.hpp"

namespace spinstat {

std::string to_string(Consistency c) {
  return c == Consistency::Consistent ? "consistent" : "degenerate";
}

ConsistencyResult surface_variation_consistency(const ExactMatrix& k, Statistics s) {
  if (!k.is_square()) throw DimensionError("kinematic matrix must be square");
  if (s == Statistics::Auto) throw PreconditionError("statistics must be bose or fermi");
  if (k.is_zero()) return {Consistency::Degenerate, "kinematic matrix is zero"};
  const SymmetryParts parts = symmetry_decompose(k);
  if (s == Statistics::Bose) {
    if (!parts.antisym.is_zero()) return {Consistency::Consistent, ""};
    return {Consistency::Degenerate,
            "generator commutes with all fields: K is symmetric and commuting fields only see K - K^T"};
  }
  if (!parts.sym.is_zero()) return {Consistency::Consistent, ""};
  return {Consistency::Degenerate,
          "generator commutes with all fields: K is antisymmetric and anticommuting fields only see K + K^T"};
}

CanonicalRelationSet canonical_momenta(const ExactMatrix& k, Statistics s) {
  CanonicalRelationSet out;
  out.statistics = s;
  out.bracket = s == Statistics::Fermi ? Bracket::Anticommutator : Bracket::Commutator;
  if (!k.is_zero()) {
    const ConsistencyResult c = surface_variation_consistency(k, s);
    if (c.status != Consistency::Consistent) throw PreconditionError(c.reason);
  } else if (s == Statistics::Auto) {
    throw PreconditionError("statistics must be bose or fermi");
  }
  const ConstraintSplit split = constraint_split(k, s);
  out.momentum_map = split.momentum_map;
  out.canonical = split.canonical;
  out.constraints = split.constraints;
  const std::size_t n = out.canonical.size();
  out.coefficients = ExactMatrix::identity(n) * Scalar::i();
  out.field_brackets = n == 0 ? ExactMatrix() : inverse(split.nonsingular_block.transpose()) * Scalar::i();
  return out;
}

namespace {

int statistics_parity(Statistics s) { return s == Statistics::Fermi ? -1 : 1; }

void append(std::string& text, const std::string& more) {
  if (!text.empty()) text += "; ";
  text += more;
}

std::optional<FlavorDiagnosis> diagonal_flavor_diagnosis(const ExactMatrix& kf, const FieldSpec& f,
                                                         Statistics stats) {
  if (f.flavors < 2) return std::nullopt;
  const std::size_t h = f.copies * f.component_dim();
  FlavorDiagnosis fd;
  for (std::size_t a = 0; a < f.flavors; ++a)
    for (std::size_t b = 0; b < f.flavors; ++b)
      if (a != b && !kf.block(a * h, b * h, h, h).is_zero()) {
        fd.note = "flavor blocks are coupled; declare antisymmetric-pair coupling to analyze them";
        return fd;
      }
  FlavorDiagonalization diag;
  diag.exact = true;
  diag.numerators = ExactMatrix::identity(kf.rows());
  diag.norms.assign(kf.rows(), Rational(1));
  diag.d = kf;
  try {
    const FlavorDiagnosis analyzed = sector_sign_analysis(diag, std::vector<std::size_t>(f.flavors, h), stats);
    fd.sector_signs = analyzed.sector_signs;
    fd.negative_norm = analyzed.negative_norm;
    fd.witness = analyzed.witness;
    fd.note = "flavor-diagonal coupling";
  } catch (const PreconditionError& e) {
    fd.note = e.what();
  }
  return fd;
}

}  // namespace

TheoryVerdict spin_statistics_verdict(const TheorySpec& spec) {
  TheoryVerdict out;
  out.build = build_kinematic(spec);
  const ExactMatrix& k = out.build.kinematic.matrix;
  out.invariance = check_su2_invariance(out.build.kinematic, theory_generators(spec));
  out.symmetry = classify_symmetry(k);
  const auto offsets = spec.offsets();

  for (std::size_t fi = 0; fi < spec.fields.size(); ++fi) {
    const FieldSpec& f = spec.fields[fi];
    const FieldKinematic& fk = out.build.fields[fi];
    StatisticsVerdict v;
    v.field = f.name;
    v.spin = f.spin;
    v.pinned = f.statistics;
    v.michel_parity = f.spin.is_integer() ? 1 : -1;
    const ExactMatrix kf = k.block(offsets[fi], offsets[fi], f.dim(), f.dim());

    std::optional<FlavorDetection> detection;
    if (spec.flavor == FlavorCoupling::AntisymmetricPair) {
      detection = detect_flavor_antisymmetry(kf, f.flavors);
      if (!detection->antisymmetric) append(v.explanation, detection->note);
    }
    const bool pair = detection && detection->antisymmetric;
    RepGenerators gens;
    if (pair) {
      v.analyzed = detection->block;
      v.analyzed_flavor_block = true;
      v.required_symmetry = scalar_product_symmetry(f.spin);
      gens = replicate(hermitian_basis(f.spin).generators, f.copies);
    } else {
      v.analyzed = kf;
      v.required_symmetry = required_symmetry(f.spin);
      gens = field_generators(f);
    }
    v.observed_symmetry = classify_symmetry(v.analyzed);
    v.invariant = check_su2_invariance(v.analyzed, gens, 0).invariant;

    if (!fk.available) {
      v.kinematic_available = false;
      append(v.explanation, fk.note);
      out.fields.push_back(std::move(v));
      continue;
    }
    if (v.analyzed.is_zero()) {
      v.kinematic_available = false;
      append(v.explanation, "kinematic block is zero");
      out.fields.push_back(std::move(v));
      continue;
    }

    v.bose = surface_variation_consistency(v.analyzed, Statistics::Bose);
    v.fermi = surface_variation_consistency(v.analyzed, Statistics::Fermi);
    const bool bose_ok = v.bose.status == Consistency::Consistent;
    const bool fermi_ok = v.fermi.status == Consistency::Consistent;

    if (f.variation == Variation::LinearCombination) {
      v.unsupported = true;
      append(v.explanation,
             "linear-combination variations lead to trilinear (para-statistics) relations, which are not analyzed");
      out.fields.push_back(std::move(v));
      continue;
    }

    if (bose_ok != fermi_ok) v.consistent_statistics = bose_ok ? Statistics::Bose : Statistics::Fermi;

    if (!v.invariant) {
      v.contradiction = true;
      append(v.explanation, "kinematic block is not invariant under rotations");
    }
    if (v.observed_symmetry == SymmetryClass::Mixed) {
      v.contradiction = true;
      append(v.explanation, "mixed symmetry: the antisymmetric part alone would allow bose, the symmetric part fermi");
    } else if (v.observed_symmetry != v.required_symmetry) {
      v.contradiction = true;
      append(v.explanation, "rotation invariance for spin " + f.spin.str() + " requires a " +
                                std::string(to_string(v.required_symmetry)) + " block, found " +
                                std::string(to_string(v.observed_symmetry)));
    }
    if (v.pinned != Statistics::Auto && v.consistent_statistics && *v.consistent_statistics != v.pinned) {
      v.contradiction = true;
      append(v.explanation, "statistics pinned to " + to_string(v.pinned) + ", but the " +
                                std::string(to_string(v.observed_symmetry)) + " kinematic block only allows " +
                                to_string(*v.consistent_statistics) + " (" + to_string(v.pinned) + " needs " +
                                (v.pinned == Statistics::Bose ? "an antisymmetric" : "a symmetric") + " block)");
    }
    if (v.consistent_statistics) v.canonical = canonical_momenta(v.analyzed, *v.consistent_statistics);

    const Statistics stats = v.consistent_statistics.value_or(Statistics::Bose);
    if (pair) {
      const std::size_t h = detection->block.rows();
      FlavorDiagnosis fd = sector_sign_analysis(diagonalize_flavor_blocks(detection->block), {h, h}, stats);
      fd.is_flavor_antisymmetric = true;
      fd.inverted_connection_attempt =
          v.consistent_statistics && statistics_parity(*v.consistent_statistics) != v.michel_parity;
      if (fd.inverted_connection_attempt) {
        fd.note = "spin " + f.spin.str() + " paired with " + to_string(*v.consistent_statistics) +
                  " statistics through a " + std::string(to_string(v.observed_symmetry)) +
                  " flavor block; diagonalizing the flavor structure gives kinematic terms of both signs";
      } else {
        fd.note = "flavor-antisymmetric coupling gives kinematic terms of both signs";
      }
      v.flavor = std::move(fd);
    } else if (spec.flavor == FlavorCoupling::Diagonal) {
      v.flavor = diagonal_flavor_diagnosis(kf, f, stats);
    }
    out.fields.push_back(std::move(v));
  }
  return out;
}

}  // namespace spinstat
