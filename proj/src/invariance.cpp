#include "spinstat/invariance.hpp"

#include "spinstat/linalg.hpp"

#include <map>

namespace spinstat {

InvarianceReport check_su2_invariance(const ExactMatrix& k, const RepGenerators& gens,
                                      std::size_t max_listed) {
  InvarianceReport rep;
  const auto defects = invariance_defects(gens, k);
  const char names[3] = {'x', 'y', 'z'};
  for (std::size_t a = 0; a < 3; ++a) {
    const ExactMatrix& d = defects[a];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (d(r, c).is_zero()) continue;
        rep.invariant = false;
        ++rep.violation_count;
        if (rep.violations.size() < max_listed) rep.violations.push_back({names[a], r, c, d(r, c)});
      }
  }
  return rep;
}

InvarianceReport check_su2_invariance(const KinematicMatrix& k, const RepGenerators& gens,
                                      std::size_t max_listed) {
  if (k.index_map.size() != k.matrix.rows()) {
    throw DimensionError("index map does not match the kinematic matrix");
  }
  return check_su2_invariance(k.matrix, gens, max_listed);
}

SymmetryClass required_symmetry(SpinLabel j) {
  return j.is_integer() ? SymmetryClass::Antisymmetric : SymmetryClass::Symmetric;
}

SymmetryClass scalar_product_symmetry(SpinLabel j) {
  return j.is_integer() ? SymmetryClass::Symmetric : SymmetryClass::Antisymmetric;
}

ConstraintSplit constraint_split(const ExactMatrix& k, Statistics s) {
  if (!k.is_square()) throw DimensionError("constraint_split needs a square matrix");
  if (s == Statistics::Auto) throw PreconditionError("constraint_split needs bose or fermi");
  ConstraintSplit out;
  const Scalar half(Rational(1, 2));
  const ExactMatrix kt = k.transpose();
  out.momentum_map = (s == Statistics::Bose ? kt - k : kt + k) * half;
  const RowEchelon e = rref(out.momentum_map);
  out.canonical = e.pivots;
  std::vector<bool> pivot(k.cols(), false);
  for (auto p : e.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < k.cols(); ++c)
    if (!pivot[c]) out.constraints.push_back(c);
  out.kernel = kernel(out.momentum_map);
  out.nonsingular_block = out.momentum_map.submatrix(out.canonical, out.canonical);
  out.kinematic_block = k.submatrix(out.canonical, out.canonical);
  return out;
}

ExactMatrix kinematic_bilinear(const ExactMatrix& k, Statistics placeholders) {
  if (!k.is_square()) throw DimensionError("kinematic_bilinear needs a square matrix");
  if (placeholders == Statistics::Auto) throw PreconditionError("placeholders must be bose or fermi");
  // A factor is (index, dotted). Moving a dotted factor to the right past an
  // undotted one costs the grading sign.
  using Factor = std::pair<std::size_t, bool>;
  const Scalar grade = placeholders == Statistics::Bose ? Scalar(1) : Scalar(-1);
  const Scalar half(Rational(1, 2));
  std::map<std::pair<std::size_t, std::size_t>, Scalar> terms;
  auto add = [&](Scalar coef, Factor first, Factor second) {
    if (first.second && !second.second) {
      std::swap(first, second);
      coef *= grade;
    }
    terms[{first.first, second.first}] += coef;
  };
  for (std::size_t r = 0; r < k.rows(); ++r)
    for (std::size_t s = 0; s < k.cols(); ++s) {
      if (k(r, s).is_zero()) continue;
      add(k(r, s) * half, {r, false}, {s, true});
      add(-k(r, s) * half, {r, true}, {s, false});
    }
  ExactMatrix out(k.rows(), k.cols());
  for (const auto& [ab, v] : terms) out(ab.first, ab.second) = v;
  return out;
}

}  // namespace spinstat
