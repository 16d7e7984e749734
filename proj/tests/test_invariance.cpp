#include "doctest.h"

#include "generators.hpp"
#include "spinstat/invariance.hpp"
#include "spinstat/linalg.hpp"
#include "spinstat/reduction.hpp"

using namespace spinstat;

namespace {

const Scalar I = Scalar::i();

// Oracle: J^T K + K J entry by entry with plain loops.
bool naive_invariant(const ExactMatrix& k, const RepGenerators& g) {
  for (std::size_t a = 0; a < 3; ++a) {
    const ExactMatrix& j = g[a];
    for (std::size_t r = 0; r < k.rows(); ++r)
      for (std::size_t c = 0; c < k.cols(); ++c) {
        Scalar s;
        for (std::size_t t = 0; t < k.rows(); ++t) s += j(t, r) * k(t, c) + k(r, t) * j(t, c);
        if (!s.is_zero()) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("check_su2_invariance: examples") {
  SUBCASE("beta0 on the spin-0 doublet") {
    const ExactMatrix b0 = duffin_kemmer_construct().beta[0];
    const auto rep = check_su2_invariance(b0, trivial_generators(5));
    CHECK(rep.invariant);
    CHECK(rep.violation_count == 0);
  }
  SUBCASE("symmetric invariant on realified spin 1/2") {
    const HermitianBasis hb = hermitian_basis(SpinLabel{1});
    CHECK(check_su2_invariance(hb.metric, hb.generators).invariant);
    CHECK(naive_invariant(hb.metric, hb.generators));
  }
  SUBCASE("Jz on spin 1 fails and lists violations") {
    const RepGenerators g = spin_generators(SpinLabel{2});
    const auto rep = check_su2_invariance(g.jz, g, 2);
    CHECK_FALSE(rep.invariant);
    CHECK(rep.violation_count > 2);
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].generator == 'x');
    const ExactMatrix d = g.jx.transpose() * g.jz + g.jz * g.jx;
    CHECK(d(rep.violations[0].row, rep.violations[0].col) == rep.violations[0].value);
  }
  CHECK_THROWS_AS(check_su2_invariance(ExactMatrix::identity(3), trivial_generators(2)), DimensionError);
  KinematicMatrix bad{ExactMatrix::identity(2), {}};
  CHECK_THROWS_AS(check_su2_invariance(bad, trivial_generators(2)), DimensionError);
}

TEST_CASE("required_symmetry") {
  CHECK(required_symmetry(SpinLabel{0}) == SymmetryClass::Antisymmetric);
  CHECK(required_symmetry(SpinLabel{1}) == SymmetryClass::Symmetric);
  CHECK(required_symmetry(SpinLabel{4}) == SymmetryClass::Antisymmetric);
  for (unsigned t = 0; t <= 8; ++t) CHECK(scalar_product_symmetry(SpinLabel{t}) != required_symmetry(SpinLabel{t}));
}

TEST_CASE("property: invariant forms on one irrep have a pure symmetry class") {
  std::mt19937 rng(11);
  for (unsigned t = 0; t <= 8; ++t) {
    const SpinLabel j{t};
    CAPTURE(t);
    const RepGenerators g = spin_generators(j);
    const FormSpace sph = invariant_form_space(g);
    REQUIRE(sph.sym_dim + sph.antisym_dim == 1);
    const ExactMatrix c = (sph.sym_dim == 1 ? sph.sym_basis[0] : sph.antisym_basis[0]) * testgen::small_scalar(rng);
    if (c.is_zero()) continue;
    CHECK(check_su2_invariance(c, g).invariant);
    CHECK(classify_symmetry(c) == scalar_product_symmetry(j));

    const HermitianBasis hb = hermitian_basis(j);
    const FormSpace herm = invariant_form_space(hb.generators);
    const auto& wanted = required_symmetry(j) == SymmetryClass::Symmetric ? herm.sym_basis : herm.antisym_basis;
    CHECK(wanted.empty() == j.is_integer());
    for (const auto& b : wanted) {
      CHECK(check_su2_invariance(b, hb.generators).invariant);
      CHECK(classify_symmetry(b) == required_symmetry(j));
    }
  }
}

TEST_CASE("constraint_split: examples") {
  SUBCASE("beta0, bose") {
    const ConstraintSplit s = constraint_split(duffin_kemmer_construct().beta[0], Statistics::Bose);
    CHECK(s.canonical == std::vector<std::size_t>{0, 1});
    CHECK(s.constraints == std::vector<std::size_t>{2, 3, 4});
    CHECK(s.kinematic_block == ExactMatrix{{0, I}, {-I, 0}});
    CHECK(s.nonsingular_block == ExactMatrix{{0, -I}, {I, 0}});
    CHECK_FALSE(determinant(s.nonsingular_block).is_zero());
    CHECK(s.kernel.size() == 3);
  }
  SUBCASE("nonsingular antisymmetric 2x2") {
    const ConstraintSplit s = constraint_split(ExactMatrix{{0, 3}, {-3, 0}}, Statistics::Bose);
    CHECK(s.constraints.empty());
    CHECK(s.canonical.size() == 2);
  }
  SUBCASE("zero matrix") {
    const ConstraintSplit s = constraint_split(ExactMatrix(3, 3), Statistics::Fermi);
    CHECK(s.canonical.empty());
    CHECK(s.constraints == std::vector<std::size_t>{0, 1, 2});
  }
  CHECK_THROWS_AS(constraint_split(ExactMatrix(2, 2), Statistics::Auto), PreconditionError);
}

TEST_CASE("property: constraint_split blocks") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const std::size_t n = dim(rng);
    ExactMatrix k = testgen::random_sparse(rng, n, n);
    if (trial % 3 == 0) k = testgen::random_antisymmetric(rng, n, true);
    if (trial % 3 == 1) k = testgen::random_symmetric(rng, n, true);
    for (auto s : {Statistics::Bose, Statistics::Fermi}) {
      const ConstraintSplit cs = constraint_split(k, s);
      CHECK(cs.canonical.size() + cs.constraints.size() == n);
      CHECK(cs.kernel.size() == cs.constraints.size());
      if (!cs.canonical.empty()) CHECK_FALSE(determinant(cs.nonsingular_block).is_zero());
      for (const auto& v : cs.kernel) CHECK(is_zero_vector(cs.momentum_map * v));
      if (s == Statistics::Bose) CHECK(cs.momentum_map.transpose() == -cs.momentum_map);
      if (s == Statistics::Fermi) CHECK(cs.momentum_map.transpose() == cs.momentum_map);
    }
  }
}

TEST_CASE("kinematic_bilinear: wrong symmetry gives a vanishing Lagrangian") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const ExactMatrix sym = testgen::random_symmetric(rng, n, true);
    const ExactMatrix anti = testgen::random_antisymmetric(rng, n, true);
    CHECK(kinematic_bilinear(sym, Statistics::Bose).is_zero());
    CHECK(kinematic_bilinear(anti, Statistics::Fermi).is_zero());
    CHECK(kinematic_bilinear(anti, Statistics::Bose) == anti);
    CHECK(kinematic_bilinear(sym, Statistics::Fermi) == sym);
    const ExactMatrix mixed = sym + anti;
    CHECK(kinematic_bilinear(mixed, Statistics::Bose) == anti);
    CHECK(kinematic_bilinear(mixed, Statistics::Fermi) == sym);
  }
}
