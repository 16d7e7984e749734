#include "doctest.h"

#include "generators.hpp"
#include "spinstat/flavor.hpp"
#include "spinstat/linalg.hpp"

#include <algorithm>
#include <map>

using namespace spinstat;

namespace {

const Scalar I = Scalar::i();

// S = numerators * diag(1/sqrt(norms)); the exact identities are checked on
// numerators: N^+ N = diag(norms) and Lambda N = N D.
void check_exact_diagonalization(const ExactMatrix& lambda, const FlavorDiagonalization& d) {
  REQUIRE(d.exact);
  const std::size_t n = lambda.rows();
  std::vector<Scalar> norms;
  for (const auto& q : d.norms) norms.push_back(q);
  CHECK(d.numerators.adjoint() * d.numerators == ExactMatrix::diagonal(norms));
  CHECK(lambda * d.numerators == d.numerators * d.d);
  CHECK(d.d.trace().is_zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) CHECK(d.d(r, c).is_zero());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    CHECK(d.d(k, k).im() <= d.d(k + 1, k + 1).im());
  }
}

}  // namespace

TEST_CASE("detect_flavor_antisymmetry") {
  const ExactMatrix k{{1, 2}, {2, 3}};
  ExactMatrix pair(4, 4);
  pair.set_block(0, 2, k);
  pair.set_block(2, 0, -k);
  const FlavorDetection d = detect_flavor_antisymmetry(pair, 2);
  CHECK(d.supported);
  CHECK(d.antisymmetric);
  CHECK(d.block == k);

  ExactMatrix diag(4, 4);
  diag.set_block(0, 0, k);
  diag.set_block(2, 2, k);
  CHECK_FALSE(detect_flavor_antisymmetry(diag, 2).antisymmetric);

  ExactMatrix sym(4, 4);
  sym.set_block(0, 2, k);
  sym.set_block(2, 0, k);
  CHECK_FALSE(detect_flavor_antisymmetry(sym, 2).antisymmetric);

  const FlavorDetection three = detect_flavor_antisymmetry(ExactMatrix(6, 6), 3);
  CHECK_FALSE(three.supported);
  CHECK(three.note.find("exactly 2 flavors") != std::string::npos);
}

TEST_CASE("diagonalize_flavor: 2x2 scalar case") {
  const ExactMatrix lambda{{0, 1}, {-1, 0}};
  const FlavorDiagonalization d = diagonalize_flavor(lambda);
  check_exact_diagonalization(lambda, d);
  CHECK(d.d == ExactMatrix{{-I, 0}, {0, I}});
  CHECK(d.numerators == ExactMatrix{{1, 1}, {-I, I}});
  CHECK(d.norms == std::vector<Rational>{2, 2});
  CHECK(d.eigenvalues == std::vector<std::string>{"0-1i", "0+1i"});
  CHECK(d.column_signs == std::vector<int>{-1, 1});

  const FlavorDiagnosis diag = sector_sign_analysis(d, {1, 1}, Statistics::Fermi);
  CHECK(diag.sector_signs == std::vector<int>{1, -1});
  CHECK(diag.negative_norm);
  CHECK_FALSE(diag.transformed_fields_hermitian);
  REQUIRE(diag.witness.has_value());
  CHECK(diag.witness->table.bracket() == Bracket::Anticommutator);
  CHECK(diag.witness->gram.matrix == ExactMatrix{{-1}});
  CHECK(diag.witness->gram.signature == Signature{0, 1, 0});
}

TEST_CASE("diagonalize_flavor: examples") {
  const ExactMatrix two{{0, 2}, {-2, 0}};
  CHECK(diagonalize_flavor(two).d == ExactMatrix{{Scalar(0, -2), 0}, {0, Scalar(0, 2)}});

  ExactMatrix block(4, 4);
  const ExactMatrix k{{1, 0}, {0, 3}};
  block.set_block(0, 2, k);
  block.set_block(2, 0, -k);
  const FlavorDiagonalization d = diagonalize_flavor(block);
  check_exact_diagonalization(block, d);
  std::vector<Scalar> diag;
  for (std::size_t r = 0; r < 4; ++r) diag.push_back(d.d(r, r));
  CHECK(diag == std::vector<Scalar>{Scalar(0, -3), Scalar(0, -1), Scalar(0, 1), Scalar(0, 3)});

  CHECK_THROWS_AS(diagonalize_flavor(ExactMatrix{{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("diagonalize_flavor: irrational magnitudes take the numeric path") {
  // Eigenvalues 0, +-i sqrt(3).
  const ExactMatrix lambda{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}};
  const FlavorDiagonalization d = diagonalize_flavor(lambda);
  CHECK_FALSE(d.exact);
  CHECK(d.column_signs == std::vector<int>{-1, 0, 1});
  const FlavorDiagnosis diag = sector_sign_analysis(d, {1, 1, 1}, Statistics::Bose);
  CHECK(diag.sector_signs == std::vector<int>{1, 0, -1});
  CHECK(diag.negative_norm);
  CHECK(diag.witness->table.bracket() == Bracket::Commutator);
}

TEST_CASE("property: exact diagonalization of random antisymmetric matrices") {
  std::mt19937 rng(404);
  int exact = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Block form [[0,K],[-K,0]] with diagonal K has rational magnitudes.
    std::uniform_int_distribution<int> dim(1, 3), val(-4, 4);
    const std::size_t h = dim(rng);
    ExactMatrix k(h, h);
    for (std::size_t r = 0; r < h; ++r) k(r, r) = val(rng);
    ExactMatrix lambda(2 * h, 2 * h);
    lambda.set_block(0, h, k);
    lambda.set_block(h, 0, -k);
    const FlavorDiagonalization d = diagonalize_flavor(lambda);
    check_exact_diagonalization(lambda, d);
    ++exact;
    // Eigenvalues come in +- pairs.
    std::map<Scalar, int, bool (*)(const Scalar&, const Scalar&)> count(
        [](const Scalar& a, const Scalar& b) { return a.im() < b.im(); });
    for (std::size_t r = 0; r < 2 * h; ++r) ++count[d.d(r, r)];
    for (const auto& [v, c] : count) CHECK(count[-v] == c);
  }
  CHECK(exact == 40);
}

TEST_CASE("diagonalize_flavor_blocks") {
  const ExactMatrix b{{2, 1}, {1, 2}};
  const FlavorDiagonalization d = diagonalize_flavor_blocks(b);
  ExactMatrix lambda(4, 4);
  lambda.set_block(0, 2, b);
  lambda.set_block(2, 0, -b);
  CHECK(lambda * d.numerators == d.numerators * d.d);
  std::vector<Scalar> norms(d.norms.begin(), d.norms.end());
  CHECK(d.numerators.adjoint() * d.numerators == ExactMatrix::diagonal(norms));
  const FlavorDiagnosis diag = sector_sign_analysis(d, {2, 2}, Statistics::Fermi);
  CHECK(diag.sector_signs == std::vector<int>{1, -1});
  CHECK(std::count(diag.sector_signs.begin(), diag.sector_signs.end(), 1) ==
        std::count(diag.sector_signs.begin(), diag.sector_signs.end(), -1));
}

TEST_CASE("sector_signs") {
  const ExactMatrix d = ExactMatrix::diagonal(std::vector<Scalar>{I, I * Scalar(2), Scalar(), -I});
  CHECK(sector_signs(d, {1, 1, 1, 1}) == std::vector<int>{1, 1, 0, -1});
  CHECK(sector_signs(ExactMatrix(2, 2), {1, 1}) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(sector_signs(ExactMatrix::diagonal(std::vector<Scalar>{I, 1}), {1, 1}), PreconditionError);
  CHECK_THROWS_AS(sector_signs(d, {1, 1}), DimensionError);

  FlavorDiagonalization plain;
  plain.exact = true;
  plain.numerators = ExactMatrix::identity(2);
  plain.d = ExactMatrix::diagonal(std::vector<Scalar>{I, I});
  const FlavorDiagnosis diag = sector_sign_analysis(plain, {1, 1}, Statistics::Bose);
  CHECK(diag.sector_signs == std::vector<int>{1, 1});
  CHECK_FALSE(diag.negative_norm);
  CHECK_FALSE(diag.witness.has_value());
}

TEST_CASE("kirchoff_check") {
  CHECK(kirchoff_check(standard_expansion("xi", "a", "adag")).compliant);
  CHECK(kirchoff_check(standard_expansion("q", "a", "adag", "0", Rational(1, 2))).compliant);

  ModeExpansion creation_only{"xi", {{"adag", OpKind::Creator, "k", 1, Phase::Positive}}};
  const KirchoffResult bad = kirchoff_check(creation_only);
  CHECK_FALSE(bad.compliant);
  CHECK(bad.detail.find("'xi'") != std::string::npos);

  ModeExpansion annihilation_only{"eta", {{"a", OpKind::Annihilator, "k", 1, Phase::Negative}}};
  CHECK_FALSE(kirchoff_check(annihilation_only).compliant);

  ModeExpansion wrong_phase{"xi",
                            {{"a", OpKind::Annihilator, "k", 1, Phase::Positive},
                             {"adag", OpKind::Creator, "k", 1, Phase::Negative}}};
  CHECK_FALSE(kirchoff_check(wrong_phase).compliant);

  ModeExpansion mismatched{"xi",
                           {{"a", OpKind::Annihilator, "k", 1, Phase::Negative},
                            {"adag", OpKind::Creator, "p", 1, Phase::Positive}}};
  CHECK_FALSE(kirchoff_check(mismatched).compliant);
}

TEST_CASE("property: kirchoff_check is invariant under relabeling modes") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    ModeExpansion e{"xi", {}};
    std::uniform_int_distribution<int> nterms(1, 6), mode(0, 2), kind(0, 1), w(1, 3);
    for (int k = nterms(rng); k > 0; --k) {
      const bool ann = kind(rng) == 0;
      e.terms.push_back({ann ? "a" : "adag", ann ? OpKind::Annihilator : OpKind::Creator,
                         "k" + std::to_string(mode(rng)), w(rng), ann ? Phase::Negative : Phase::Positive});
    }
    ModeExpansion relabeled = e;
    for (auto& t : relabeled.terms) t.mode = "mode_" + std::string(1, static_cast<char>('z' - (t.mode[1] - '0')));
    CHECK(kirchoff_check(e).compliant == kirchoff_check(relabeled).compliant);
  }
}
