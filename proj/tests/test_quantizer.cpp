#include "doctest.h"

#include "generators.hpp"
#include "spinstat/linalg.hpp"
#include "spinstat/quantizer.hpp"

using namespace spinstat;

namespace {

const Scalar I = Scalar::i();

std::string spin_text(unsigned two_j) {
  return two_j % 2 == 0 ? std::to_string(two_j / 2) : std::to_string(two_j) + "/2";
}

TheoryVerdict verdict_of(const std::string& body) { return spin_statistics_verdict(parse_theory("theory t\n" + body)); }

}  // namespace

TEST_CASE("surface_variation_consistency: examples") {
  const ExactMatrix anti{{0, I}, {-I, 0}};
  CHECK(surface_variation_consistency(anti, Statistics::Bose).status == Consistency::Consistent);
  const ConsistencyResult f = surface_variation_consistency(anti, Statistics::Fermi);
  CHECK(f.status == Consistency::Degenerate);
  CHECK(f.reason.find("generator commutes with all fields") == 0);

  const ExactMatrix id = ExactMatrix::identity(3);
  CHECK(surface_variation_consistency(id, Statistics::Bose).status == Consistency::Degenerate);
  CHECK(surface_variation_consistency(id, Statistics::Fermi).status == Consistency::Consistent);

  CHECK(surface_variation_consistency(ExactMatrix(2, 2), Statistics::Bose).status == Consistency::Degenerate);
  CHECK(surface_variation_consistency(ExactMatrix(2, 2), Statistics::Fermi).status == Consistency::Degenerate);
  CHECK_THROWS_AS(surface_variation_consistency(id, Statistics::Auto), PreconditionError);
}

TEST_CASE("property: exactly one statistics is consistent for a pure class") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const bool symmetric = trial % 2 == 0;
    const ExactMatrix k = symmetric ? testgen::random_symmetric(rng, n, trial % 4 < 2)
                                    : testgen::random_antisymmetric(rng, n, trial % 4 < 2);
    if (k.is_zero()) continue;
    const bool bose = surface_variation_consistency(k, Statistics::Bose).status == Consistency::Consistent;
    const bool fermi = surface_variation_consistency(k, Statistics::Fermi).status == Consistency::Consistent;
    CHECK(bose != fermi);
    CHECK(bose == !symmetric);
  }
}

TEST_CASE("canonical_momenta") {
  SUBCASE("scalar doublet: phi and phidot are conjugate") {
    const ExactMatrix k{{0, I}, {-I, 0}};
    const CanonicalRelationSet c = canonical_momenta(k, Statistics::Bose);
    CHECK(c.bracket == Bracket::Commutator);
    CHECK(c.momentum_map == ExactMatrix{{0, -I}, {I, 0}});
    // Pi_1 is proportional to xi_2 and Pi_2 to xi_1.
    CHECK(c.momentum_map(0, 0).is_zero());
    CHECK(c.coefficients == ExactMatrix::identity(2) * I);
    // [xi_n, Pi_j] = sum_r P_jr [xi_n, xi_r] = i delta_nj.
    CHECK(c.field_brackets * c.momentum_map.transpose() == ExactMatrix::identity(2) * I);
    CHECK(c.field_brackets.transpose() == -c.field_brackets);
  }
  SUBCASE("Majorana: momentum linear in the field itself") {
    const ExactMatrix k = hermitian_basis(SpinLabel{1}).metric;
    const CanonicalRelationSet c = canonical_momenta(k, Statistics::Fermi);
    CHECK(c.bracket == Bracket::Anticommutator);
    CHECK(c.momentum_map == k);
    CHECK(c.canonical.size() == 4);
    CHECK(c.field_brackets.transpose() == c.field_brackets);
  }
  SUBCASE("zero K") {
    const CanonicalRelationSet c = canonical_momenta(ExactMatrix(3, 3), Statistics::Bose);
    CHECK(c.canonical.empty());
    CHECK(c.constraints.size() == 3);
  }
  CHECK_THROWS_WITH_AS(canonical_momenta(ExactMatrix{{0, 1}, {-1, 0}}, Statistics::Fermi),
                       doctest::Contains("generator commutes"), PreconditionError);
}

TEST_CASE("property: momentum map symmetry follows the statistics") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const bool symmetric = trial % 2 == 0;
    const ExactMatrix k = symmetric ? testgen::random_symmetric(rng, n, true) : testgen::random_antisymmetric(rng, n, true);
    if (k.is_zero()) continue;
    const Statistics s = symmetric ? Statistics::Fermi : Statistics::Bose;
    const CanonicalRelationSet c = canonical_momenta(k, s);
    CHECK(c.momentum_map.transpose() == (symmetric ? c.momentum_map : -c.momentum_map));
  }
}

TEST_CASE("spin_statistics_verdict: worked cases") {
  SUBCASE("doubled scalar is bose") {
    const TheoryVerdict v = verdict_of("field phi spin=0 copies=2\n");
    REQUIRE(v.fields.size() == 1);
    CHECK(v.fields[0].consistent_statistics == Statistics::Bose);
    CHECK(v.fields[0].michel_parity == 1);
    CHECK_FALSE(v.fields[0].contradiction);
    CHECK(v.invariance.invariant);
  }
  SUBCASE("Majorana is fermi") {
    const TheoryVerdict v = verdict_of("field psi spin=1/2\n");
    CHECK(v.fields[0].consistent_statistics == Statistics::Fermi);
    CHECK(v.fields[0].michel_parity == -1);
    CHECK_FALSE(v.fields[0].contradiction);
  }
  SUBCASE("pinned bose spin 1/2 is a contradiction") {
    const TheoryVerdict v = verdict_of("field psi spin=1/2 statistics=bose\n");
    CHECK(v.fields[0].contradiction);
    CHECK(v.fields[0].explanation.find("pinned to bose") != std::string::npos);
    CHECK(v.fields[0].explanation.find("symmetric") != std::string::npos);
  }
  SUBCASE("single scalar has no kinematic term") {
    const TheoryVerdict v = verdict_of("field phi spin=0\n");
    CHECK_FALSE(v.fields[0].kinematic_available);
    CHECK_FALSE(v.fields[0].consistent_statistics.has_value());
    CHECK(v.fields[0].explanation.find("field doubling required") != std::string::npos);
  }
  SUBCASE("flavor-antisymmetric scalar pair is the inverted route") {
    const TheoryVerdict v = verdict_of("field phi spin=0 flavors=2\nflavor antisymmetric-pair\n");
    const auto& f = v.fields[0];
    CHECK(f.analyzed_flavor_block);
    CHECK(f.consistent_statistics == Statistics::Fermi);
    REQUIRE(f.flavor.has_value());
    CHECK(f.flavor->is_flavor_antisymmetric);
    CHECK(f.flavor->inverted_connection_attempt);
    CHECK(f.flavor->negative_norm);
    CHECK(f.flavor->sector_signs == std::vector<int>{1, -1});
    REQUIRE(f.flavor->witness.has_value());
    CHECK(f.flavor->witness->gram.matrix == ExactMatrix{{-1}});
  }
  SUBCASE("flavor-diagonal charged scalar has positive sectors") {
    const TheoryVerdict v = verdict_of("field phi spin=0 flavors=2 copies=2\n");
    const auto& f = v.fields[0];
    CHECK(f.consistent_statistics == Statistics::Bose);
    REQUIRE(f.flavor.has_value());
    CHECK(f.flavor->sector_signs == std::vector<int>{1, 1});
    CHECK_FALSE(f.flavor->negative_norm);
  }
  SUBCASE("linear-combination variation is labelled unsupported") {
    const TheoryVerdict v = verdict_of("field psi spin=1/2 variation=linear-combination\n");
    CHECK(v.fields[0].unsupported);
    CHECK_FALSE(v.fields[0].consistent_statistics.has_value());
  }
}

TEST_CASE("property: Michel sweep over auto kinematics") {
  for (unsigned t = 0; t <= kMaxTwoJ; ++t) {
    const std::string copies = t % 2 == 0 ? " copies=2" : "";
    const TheoryVerdict v = verdict_of("field x spin=" + spin_text(t) + copies + "\n");
    CAPTURE(t);
    const auto& f = v.fields[0];
    REQUIRE(f.consistent_statistics.has_value());
    CHECK(*f.consistent_statistics == (t % 2 == 0 ? Statistics::Bose : Statistics::Fermi));
    CHECK(f.michel_parity == (t % 2 == 0 ? 1 : -1));
    CHECK_FALSE(f.contradiction);
    CHECK(f.invariant);
    CHECK(f.observed_symmetry == required_symmetry(SpinLabel{t}));
  }
}
